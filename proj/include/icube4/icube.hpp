#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "icube4/quat.hpp"

namespace icube4 {

// Plain integer vector; dimension is its length.
using IVec = std::vector<i64>;

i64 dot(const IVec& a, const IVec& b);
i64 norm_of(const IVec& v);
bool is_zero_vec(const IVec& v);

// Fixed identification (a, b, c, d) <-> a + b*i + c*j + d*k used on every
// vector/quaternion boundary.
Quat quat_from_vec(const IVec& v);
IVec vec_from_quat(const Quat& q);

// An ordered tuple of vectors intended to be pairwise twins (orthogonal,
// equal norm, nonzero). Validity is checked by validate_icube, not enforced
// by the type.
struct ICube {
  std::vector<IVec> vectors;

  int size() const { return static_cast<int>(vectors.size()); }      // m
  int dim() const { return vectors.empty() ? 0 : static_cast<int>(vectors[0].size()); }
  i64 edge_norm() const;

  bool operator==(const ICube&) const = default;
};

// Twin test for nonzero Lipschitz quaternions: equal norms and
// conj(a) b = -conj(b) a, equivalently orthogonal coefficient vectors of the
// same length. Throws: zero, not_lipschitz.
bool are_twins(const Quat& a, const Quat& b);

// First violated condition, or nullopt for a valid icube.
std::optional<std::string> icube_violation(const ICube& c);
bool validate_icube(const ICube& c);

// gcd of all entries of all vectors (nonnegative).
i64 icube_content(const ICube& c);
bool is_primitive_icube(const ICube& c);

using ParitySignature = std::vector<KElem>;

// Per-vector parity classes of a dimension-4 icube with odd edge norm;
// always pairwise distinct. Throws: invalid_icube, even_norm.
ParitySignature parity_signature(const ICube& c);

// A signature is orderly when it is a prefix of (1, i, j, k).
bool is_orderly(const ParitySignature& sig);

// A permutation of the basis letters, acting on coordinate positions:
// the coefficient of g in the image is the coefficient of image[g] in the
// argument.
struct KPerm {
  std::array<KElem, 4> image{KElem::One, KElem::I, KElem::J, KElem::K};

  KElem operator()(KElem g) const { return image[static_cast<int>(g)]; }
  KPerm inverse() const;
  bool is_valid() const;

  bool operator==(const KPerm&) const = default;
};

// All 24 permutations in lexicographic order of their image tuples.
const std::vector<KPerm>& all_kperms();

IVec permute_entries(const IVec& v, const KPerm& r);
ICube permute_components(const ICube& c, const KPerm& r);

// Deterministic permutation carrying the icube to orderly type: the
// lexicographically least r whose image sends the orderly prefix to the
// icube's signature. Throws: invalid_icube, even_norm.
std::pair<KPerm, ICube> to_orderly(const ICube& c);

struct DyadicReduction {
  int power = 0;            // 2-adic valuation of the edge norm
  std::optional<Quat> eta;  // common left factor member, set iff power >= 1
  ICube odd_icube;          // edge norm odd
};

// Strips the unique common left factor (1+i)^(power-1) * eta from a
// dimension-4 icube with edge norm 2^power * D. Throws: invalid_icube.
DyadicReduction reduce_dyadic(const ICube& c);

// Constructive certificate: the icube equals
//   (1+i)^(power-1) * eta  *  perm^-1( content * gamma * eps_l * delta )
// with eps_l = signs[l] * (l-th of 1, i, j, k), gamma and delta primary.
// Canonical form: gamma primitive for m >= 3; gamma*i*conj(gamma) primitive
// for m = 2; for m = 1 gamma is the primary associate of the reduced vector
// and delta = 1.
struct Decomposition {
  int dyadic_power = 0;
  std::optional<Quat> eta;
  KPerm coord_perm;
  i64 scalar_content = 1;
  Quat gamma;
  Quat delta;
  std::vector<int> signs;

  bool operator==(const Decomposition&) const = default;
};

// Full pipeline: dyadic reduction, orderly permutation, content extraction,
// then primary prime extraction. Exact recomposition via compose; the
// certificate is unique for m >= 2. Throws: invalid_icube.
Decomposition decompose(const ICube& c);

// Rebuilds the icube from its certificate. Throws: inconsistent_certificate.
ICube compose(const Decomposition& d, int m);

// Appends one vector to an m-icube in Z^4 (m <= 3), leaving the prefix
// untouched. Throws: already_full, invalid_icube.
ICube extend_z4(const ICube& c);

// Completes an (n-1)-icube in Z^n using the signed maximal minors of its
// column matrix; for odd n this requires the edge norm to be a perfect
// square. The appended vector is normalized to a positive first nonzero
// entry and is unique up to sign.
// Throws: invalid_icube, odd_dimension_nonsquare_norm.
ICube extend_by_minors(const ICube& c);

// The full n-icube containing v as its first row, from the multiplication
// tables of the complex numbers, quaternions and Cayley numbers
// (n = 2, 4, 8). Throws: unsupported_dimension, zero_vector.
ICube cayley_extension(const IVec& v);

}  // namespace icube4
