#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "icube4/common.hpp"

namespace icube4 {

// The Klein four-group on the quaternion basis letters {1, i, j, k}:
// quaternion multiplication with the signs disregarded.
enum class KElem : int { One = 0, I = 1, J = 2, K = 3 };

KElem kmul(KElem a, KElem b);
char kelem_char(KElem g);
std::optional<KElem> kelem_from_char(char c);

// A Hurwitz integral quaternion, stored via its doubled coefficients
// (d1, di, dj, dk), so the quaternion is (d1 + di*i + dj*j + dk*k) / 2.
// Invariant: the four doubled coefficients share one parity. All-even means
// the element is a Lipschitz integer (integer coefficients).
class Quat {
 public:
  constexpr Quat() = default;

  // Validates the equal-parity invariant.
  static Quat from_doubled(i64 d1, i64 di, i64 dj, i64 dk);
  static Quat from_doubled(const std::array<i64, 4>& d);
  // Integer coefficients a + b*i + c*j + d*k.
  static Quat from_coeffs(i64 a, i64 b, i64 c, i64 d);
  static Quat scalar(i64 a) { return from_coeffs(a, 0, 0, 0); }

  const std::array<i64, 4>& doubled() const { return d_; }

  bool is_zero() const;
  bool is_lipschitz() const;  // all doubled coefficients even
  bool is_pure() const { return d_[0] == 0; }

  i64 norm() const;  // (d1^2 + di^2 + dj^2 + dk^2) / 4, always an integer
  Quat conjugate() const;

  Quat operator-() const;
  friend Quat operator+(const Quat& a, const Quat& b);
  friend Quat operator-(const Quat& a, const Quat& b);
  friend Quat operator*(const Quat& a, const Quat& b);
  friend Quat operator*(i64 s, const Quat& a);

  bool operator==(const Quat&) const = default;

  // Lexicographic order on doubled coefficients; used for canonical picks
  // among associates.
  friend bool lex_less(const Quat& a, const Quat& b) { return a.d_ < b.d_; }

 private:
  std::array<i64, 4> d_{0, 0, 0, 0};
};

Quat quat_one();
Quat quat_i();
Quat quat_j();
Quat quat_k();
Quat basis_quat(KElem g);

// The 24 units of the Hurwitz ring, in lexicographic doubled-coefficient
// order: the 8 Lipschitz units +-1, +-i, +-j, +-k and the 16 half-integer
// units (+-1 +- i +- j +- k)/2.
std::span<const Quat> units();
bool is_unit(const Quat& q);

// Parity class of a Lipschitz quaternion with odd norm: the unique basis
// letter g whose coefficient has a different parity from the other three.
// Throws: not_lipschitz, even_norm.
KElem parity_class(const Quat& a);

// A quaternion is primary when it lies in the class of 1 and its coefficient
// sum is congruent to 1 mod 4. Exactly one of +-a is primary for a in that
// class. Throws: zero, even_norm.
bool is_primary(const Quat& a);

struct PrimaryAssociate {
  Quat primary;  // the primary associate
  Quat unit;     // the unit applied (on the named side) to reach it
};

// The unique unit eps with eps*a primary (resp. a*eps primary). Found by
// searching all 24 units; exactly one hit. Throws: zero, even_norm.
PrimaryAssociate primary_left_associate(const Quat& a);
PrimaryAssociate primary_right_associate(const Quat& a);

struct DivRem {
  Quat quot;
  Quat rem;
};

// Euclidean division. div_rem_left solves a = b*q + r, div_rem_right solves
// a = q*b + r, both with norm(r) < norm(b). The quotient is the Hurwitz point
// nearest to the exact quotient; ties (including the integer-versus-half
// lattice choice) resolve by minimal remainder norm, then lexicographically
// least doubled quotient. Throws: division_by_zero.
DivRem div_rem_left(const Quat& a, const Quat& b);
DivRem div_rem_right(const Quat& a, const Quat& b);

// Exact one-sided quotients: the q with a = b*q (resp. a = q*b) when it
// exists in the Hurwitz ring. `lipschitz` restricts the quotient to integer
// coefficients.
std::optional<Quat> left_quotient(const Quat& a, const Quat& b);
std::optional<Quat> right_quotient(const Quat& a, const Quat& b);
std::optional<Quat> left_quotient_lipschitz(const Quat& a, const Quat& b);
bool left_divides(const Quat& b, const Quat& a);
bool right_divides(const Quat& b, const Quat& a);

// Greatest common one-sided divisors via the Euclidean algorithm.
// gcd_left(a, b) left-divides both arguments and is left-divided by every
// common left divisor; it is unique up to a unit on the right and is
// normalized to the primary representative when its norm is odd, otherwise
// to the lexicographically least doubled tuple among its 24 associates.
// gcd_right mirrors this on the other side. Throws: both_zero.
Quat gcd_left(const Quat& a, const Quat& b);
Quat gcd_right(const Quat& a, const Quat& b);

// True when every coefficient of q is divisible by t (t odd).
bool divisible_by_int(const Quat& q, i64 t);

// The primary quaternion pi of norm p dividing a on the stated side, unique
// once normalized primary. Requires p an odd prime with p | norm(a) and p
// not dividing a coefficient-wise.
// Throws: even_prime, not_prime, not_divisor, p_divides_alpha.
Quat extract_prime_left(const Quat& a, i64 p);
Quat extract_prime_right(const Quat& a, i64 p);

struct DyadicFactor {
  int power = 0;             // 2-adic valuation of norm(a)
  std::optional<Quat> eta;   // in {1+i, 1+j, 1+k}; set iff power >= 1
  Quat odd_part;             // b with a = (1+i)^(power-1) * eta * b, norm(b) odd
};

// Splits off the full dyadic left factor of a Lipschitz quaternion.
// Throws: zero, not_lipschitz.
DyadicFactor factor_dyadic(const Quat& a);

// All Hurwitz quaternions of norm n, in lexicographic doubled order.
// For an odd prime p there are exactly 24(p+1); for p = 2 exactly 24.
std::vector<Quat> elements_of_norm(i64 n);

// True when the coefficients of a Lipschitz quaternion are coprime.
// Throws: not_lipschitz.
bool is_primitive(const Quat& a);

// Inverse of theta = gamma * i * conj(gamma) for a primitive pure Lipschitz
// theta with square norm M^2: returns one such gamma of norm M. Any two
// solutions differ by a right unit in {+-1, +-i}; the primary solution is
// returned when one exists, otherwise the lexicographically least.
// Throws: not_pure, not_square_norm, not_primitive.
Quat pure_square_root(const Quat& theta);

}  // namespace icube4
