#include "icube4/icube.hpp"

#include <algorithm>
#include <numeric>

namespace icube4 {

i64 dot(const IVec& a, const IVec& b) {
  require(a.size() == b.size(), Errc::invalid_argument, "dot of unequal dimensions");
  i64 s = 0;
  for (size_t t = 0; t < a.size(); ++t) s = checked_add(s, checked_mul(a[t], b[t]));
  return s;
}

i64 norm_of(const IVec& v) { return dot(v, v); }

bool is_zero_vec(const IVec& v) {
  return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

Quat quat_from_vec(const IVec& v) {
  require(v.size() == 4, Errc::invalid_argument, "quaternion needs dimension 4");
  return Quat::from_coeffs(v[0], v[1], v[2], v[3]);
}

IVec vec_from_quat(const Quat& q) {
  require(q.is_lipschitz(), Errc::not_lipschitz, "only integer quaternions map to vectors");
  const auto& d = q.doubled();
  return IVec{d[0] / 2, d[1] / 2, d[2] / 2, d[3] / 2};
}

i64 ICube::edge_norm() const {
  require(!vectors.empty(), Errc::invalid_icube, "empty icube has no edge norm");
  return norm_of(vectors[0]);
}

bool are_twins(const Quat& a, const Quat& b) {
  require(a.is_lipschitz() && b.is_lipschitz(), Errc::not_lipschitz,
          "twin test is for integer quaternions");
  require(!a.is_zero() && !b.is_zero(), Errc::zero, "twin test needs nonzero quaternions");
  if (a.norm() != b.norm()) return false;
  return a.conjugate() * b == -(b.conjugate() * a);
}

std::optional<std::string> icube_violation(const ICube& c) {
  const int m = c.size();
  if (m < 1) return "icube has no vectors";
  const int n = c.dim();
  if (n < 1) return "vectors must have positive dimension";
  if (m > n) return "more vectors than the dimension allows";
  for (int u = 0; u < m; ++u) {
    if (static_cast<int>(c.vectors[u].size()) != n)
      return "vector " + std::to_string(u) + " has the wrong dimension";
    if (is_zero_vec(c.vectors[u])) return "vector " + std::to_string(u) + " is zero";
  }
  const i64 norm0 = norm_of(c.vectors[0]);
  for (int u = 1; u < m; ++u)
    if (norm_of(c.vectors[u]) != norm0)
      return "vectors 0 and " + std::to_string(u) + " have different norms";
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v)
      if (dot(c.vectors[u], c.vectors[v]) != 0)
        return "vectors " + std::to_string(u) + " and " + std::to_string(v) +
               " are not orthogonal";
  return std::nullopt;
}

bool validate_icube(const ICube& c) { return !icube_violation(c).has_value(); }

i64 icube_content(const ICube& c) {
  i64 g = 0;
  for (const IVec& v : c.vectors)
    for (i64 x : v) g = std::gcd(g, x);
  return g;
}

bool is_primitive_icube(const ICube& c) { return icube_content(c) == 1; }

ParitySignature parity_signature(const ICube& c) {
  require(validate_icube(c), Errc::invalid_icube, "parity signature needs a valid icube");
  require(c.dim() == 4, Errc::invalid_icube, "parity signature is defined in dimension 4");
  require((c.edge_norm() & 1) == 1, Errc::even_norm, "parity signature needs odd edge norm");
  ParitySignature sig;
  sig.reserve(c.vectors.size());
  for (const IVec& v : c.vectors) sig.push_back(parity_class(quat_from_vec(v)));
  for (size_t u = 0; u < sig.size(); ++u)
    for (size_t v = u + 1; v < sig.size(); ++v)
      require(sig[u] != sig[v], Errc::internal, "parity classes of twins must differ");
  return sig;
}

bool is_orderly(const ParitySignature& sig) {
  if (sig.size() > 4) return false;
  for (size_t t = 0; t < sig.size(); ++t)
    if (sig[t] != static_cast<KElem>(t)) return false;
  return true;
}

KPerm KPerm::inverse() const {
  KPerm inv;
  for (int g = 0; g < 4; ++g) inv.image[static_cast<int>(image[g])] = static_cast<KElem>(g);
  return inv;
}

bool KPerm::is_valid() const {
  std::array<bool, 4> seen{false, false, false, false};
  for (KElem g : image) {
    int t = static_cast<int>(g);
    if (t < 0 || t > 3 || seen[t]) return false;
    seen[t] = true;
  }
  return true;
}

const std::vector<KPerm>& all_kperms() {
  static const std::vector<KPerm> perms = [] {
    std::vector<KPerm> out;
    std::array<int, 4> img{0, 1, 2, 3};
    do {
      KPerm r;
      for (int g = 0; g < 4; ++g) r.image[g] = static_cast<KElem>(img[g]);
      out.push_back(r);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }();
  return perms;
}

IVec permute_entries(const IVec& v, const KPerm& r) {
  require(v.size() == 4, Errc::invalid_argument, "component permutation needs dimension 4");
  IVec out(4);
  for (int g = 0; g < 4; ++g) out[g] = v[static_cast<int>(r.image[g])];
  return out;
}

ICube permute_components(const ICube& c, const KPerm& r) {
  require(c.dim() == 4, Errc::invalid_icube, "component permutation needs dimension 4");
  ICube out;
  out.vectors.reserve(c.vectors.size());
  for (const IVec& v : c.vectors) out.vectors.push_back(permute_entries(v, r));
  return out;
}

std::pair<KPerm, ICube> to_orderly(const ICube& c) {
  const ParitySignature sig = parity_signature(c);
  for (const KPerm& r : all_kperms()) {
    bool hit = true;
    for (size_t t = 0; t < sig.size(); ++t)
      if (r(static_cast<KElem>(t)) != sig[t]) {
        hit = false;
        break;
      }
    if (hit) return {r, permute_components(c, r)};
  }
  fail(Errc::internal, "no permutation maps the signature to orderly form");
}

DyadicReduction reduce_dyadic(const ICube& c) {
  require(validate_icube(c), Errc::invalid_icube, "dyadic reduction needs a valid icube");
  require(c.dim() == 4, Errc::invalid_icube, "dyadic reduction is defined in dimension 4");
  const int power = valuation2(c.edge_norm());
  if (power == 0) return DyadicReduction{0, std::nullopt, c};

  std::vector<Quat> cur;
  cur.reserve(c.vectors.size());
  for (const IVec& v : c.vectors) cur.push_back(quat_from_vec(v));

  const Quat one_plus_i = Quat::from_coeffs(1, 1, 0, 0);
  for (int s = 0; s + 1 < power; ++s)
    for (Quat& q : cur) {
      auto quot = left_quotient_lipschitz(q, one_plus_i);
      require(quot.has_value(), Errc::internal, "missing common 1+i factor");
      q = *quot;
    }

  // At norm 2D the same eta in {1+i, 1+j, 1+k} comes out of every member.
  std::optional<Quat> eta;
  std::vector<Quat> reduced;
  for (const Quat& e : {Quat::from_coeffs(1, 1, 0, 0), Quat::from_coeffs(1, 0, 1, 0),
                        Quat::from_coeffs(1, 0, 0, 1)}) {
    std::vector<Quat> trial;
    bool all = true;
    for (const Quat& q : cur) {
      auto quot = left_quotient_lipschitz(q, e);
      if (!quot) {
        all = false;
        break;
      }
      trial.push_back(*quot);
    }
    if (all) {
      require(!eta.has_value(), Errc::internal, "common dyadic eta not unique");
      eta = e;
      reduced = std::move(trial);
    }
  }
  require(eta.has_value(), Errc::internal, "no common dyadic eta");

  ICube odd;
  odd.vectors.reserve(reduced.size());
  for (const Quat& q : reduced) odd.vectors.push_back(vec_from_quat(q));
  require((odd.edge_norm() & 1) == 1, Errc::internal, "reduction left an even norm");
  return DyadicReduction{power, eta, odd};
}

namespace {

// Smallest prime factor by trial division; inputs here are small odd norms.
i64 smallest_prime_factor(i64 n) {
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return d;
  return n;
}

std::vector<i64> ascending_prime_factors(i64 n) {
  std::vector<i64> out;
  while (n > 1) {
    i64 p = smallest_prime_factor(n);
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  return out;
}

}  // namespace

Decomposition decompose(const ICube& c) {
  auto violation = icube_violation(c);
  require(!violation.has_value(), Errc::invalid_icube,
          violation.has_value() ? violation->c_str() : "");
  require(c.dim() == 4, Errc::invalid_icube, "decomposition is defined in dimension 4");
  const int m = c.size();

  Decomposition out;

  DyadicReduction red = reduce_dyadic(c);
  out.dyadic_power = red.power;
  out.eta = red.eta;

  auto [perm, orderly] = to_orderly(red.odd_icube);
  out.coord_perm = perm;

  out.scalar_content = icube_content(orderly);
  std::vector<Quat> alphas;
  alphas.reserve(orderly.vectors.size());
  for (const IVec& v : orderly.vectors) {
    IVec w(v);
    for (i64& x : w) x /= out.scalar_content;
    alphas.push_back(quat_from_vec(w));
  }

  if (m == 1) {
    // Reduced vector lies in the class of 1; its primary associate is +-itself.
    const Quat& a = alphas[0];
    if (is_primary(a)) {
      out.gamma = a;
      out.signs = {1};
    } else {
      out.gamma = -a;
      out.signs = {-1};
    }
    out.delta = quat_one();
    return out;
  }

  // Pull primary prime factors off the whole tuple, smallest prime first,
  // preferring the left side; a quaternion of norm 1 remains of each member.
  Quat gamma = quat_one();
  Quat delta = quat_one();
  i64 norm_left = alphas[0].norm();
  for (i64 p : ascending_prime_factors(norm_left)) {
    int pivot = -1;
    for (int t = 0; t < m; ++t)
      if (!divisible_by_int(alphas[t], p)) {
        pivot = t;
        break;
      }
    require(pivot >= 0, Errc::internal, "content must stay trivial during extraction");

    Quat pi = extract_prime_left(alphas[pivot], p);
    std::vector<Quat> next;
    next.reserve(m);
    bool left_ok = true;
    for (const Quat& a : alphas) {
      auto q = left_quotient(a, pi);
      if (!q) {
        left_ok = false;
        break;
      }
      next.push_back(*q);
    }
    if (left_ok) {
      gamma = gamma * pi;
    } else {
      pi = extract_prime_right(alphas[pivot], p);
      next.clear();
      for (const Quat& a : alphas) {
        auto q = right_quotient(a, pi);
        require(q.has_value(), Errc::internal, "no common one-sided prime divisor");
        next.push_back(*q);
      }
      delta = pi * delta;
    }
    alphas = std::move(next);
  }

  // Remaining members are signed basis letters in orderly positions.
  std::vector<int> signs(m, 1);
  for (int t = 0; t < m; ++t) {
    const Quat& u = alphas[t];
    require(u.norm() == 1 && u.is_lipschitz(), Errc::internal, "core must be a Lipschitz unit");
    if (u == basis_quat(static_cast<KElem>(t))) {
      signs[t] = 1;
    } else if (u == -basis_quat(static_cast<KElem>(t))) {
      signs[t] = -1;
    } else {
      fail(Errc::internal, "core unit out of orderly position");
    }
  }

  if (m == 2) {
    // Re-pull right factors until gamma * i * conj(gamma) is primitive, the
    // canonical condition making the 2-icube certificate unique. Each pulled
    // prime pi satisfies pi*i = +-i*pi; the minus case flips the second sign.
    while (true) {
      Quat pure = gamma * quat_i() * gamma.conjugate();
      i64 g = 0;
      for (i64 v : pure.doubled()) g = std::gcd(g, v / 2);
      if (g == 1) break;
      i64 p = smallest_prime_factor(g);
      Quat pi = extract_prime_right(gamma, p);
      auto reduced_gamma = right_quotient(gamma, pi);
      require(reduced_gamma.has_value(), Errc::internal, "extracted prime must divide gamma");
      Quat moved = pi * quat_i();
      if (moved != quat_i() * pi) {
        require(moved == -(quat_i() * pi), Errc::internal, "pi i must be +-i pi");
        signs[1] = -signs[1];
      }
      gamma = *reduced_gamma;
      delta = pi * delta;
    }
  } else {
    require(is_primitive(gamma), Errc::internal, "gamma must inherit primitivity");
  }

  out.gamma = gamma;
  out.delta = delta;
  out.signs = std::move(signs);
  return out;
}

ICube compose(const Decomposition& d, int m) {
  require(m >= 1 && m <= 4, Errc::inconsistent_certificate, "m must be between 1 and 4");
  require(static_cast<int>(d.signs.size()) == m, Errc::inconsistent_certificate,
          "sign count must equal m");
  for (int s : d.signs)
    require(s == 1 || s == -1, Errc::inconsistent_certificate, "signs must be +-1");
  require(d.coord_perm.is_valid(), Errc::inconsistent_certificate, "invalid permutation");
  require(d.scalar_content >= 1 && (d.scalar_content & 1) == 1,
          Errc::inconsistent_certificate, "scalar content must be a positive odd integer");
  require(d.dyadic_power >= 0, Errc::inconsistent_certificate, "negative dyadic power");
  require(d.eta.has_value() == (d.dyadic_power >= 1), Errc::inconsistent_certificate,
          "eta must be present exactly when the dyadic power is positive");
  if (d.eta) {
    bool ok = *d.eta == Quat::from_coeffs(1, 1, 0, 0) ||
              *d.eta == Quat::from_coeffs(1, 0, 1, 0) ||
              *d.eta == Quat::from_coeffs(1, 0, 0, 1);
    require(ok, Errc::inconsistent_certificate, "eta must be one of 1+i, 1+j, 1+k");
  }
  require(!d.gamma.is_zero() && !d.delta.is_zero(), Errc::inconsistent_certificate,
          "gamma and delta must be nonzero");
  require((d.gamma.norm() & 1) == 1 && (d.delta.norm() & 1) == 1,
          Errc::inconsistent_certificate, "gamma and delta must have odd norm");
  require(is_primary(d.gamma) && is_primary(d.delta), Errc::inconsistent_certificate,
          "gamma and delta must be primary");

  ICube orderly;
  orderly.vectors.reserve(m);
  for (int t = 0; t < m; ++t) {
    Quat eps = d.signs[t] * basis_quat(static_cast<KElem>(t));
    Quat u = d.scalar_content * (d.gamma * eps * d.delta);
    orderly.vectors.push_back(vec_from_quat(u));
  }

  ICube unpermuted = permute_components(orderly, d.coord_perm.inverse());
  if (d.dyadic_power == 0) {
    require(validate_icube(unpermuted), Errc::internal, "composed icube invalid");
    return unpermuted;
  }

  Quat prefix = *d.eta;
  const Quat one_plus_i = Quat::from_coeffs(1, 1, 0, 0);
  for (int s = 0; s + 1 < d.dyadic_power; ++s) prefix = one_plus_i * prefix;
  ICube out;
  out.vectors.reserve(m);
  for (const IVec& v : unpermuted.vectors)
    out.vectors.push_back(vec_from_quat(prefix * quat_from_vec(v)));
  require(validate_icube(out), Errc::internal, "composed icube invalid");
  return out;
}

ICube extend_z4(const ICube& c) {
  auto violation = icube_violation(c);
  require(!violation.has_value(), Errc::invalid_icube,
          violation.has_value() ? violation->c_str() : "");
  require(c.dim() == 4, Errc::invalid_icube, "extension is defined in dimension 4");
  require(c.size() < 4, Errc::already_full, "a 4-icube in Z^4 cannot be extended");
  const int m = c.size();
  Decomposition d = decompose(c);
  d.signs.push_back(1);
  ICube out = compose(d, m + 1);
  for (int t = 0; t < m; ++t)
    require(out.vectors[t] == c.vectors[t], Errc::internal, "extension must keep the prefix");
  return out;
}

namespace {

// Exact integer determinant by fraction-free (Bareiss) elimination.
i64 int_determinant(std::vector<std::vector<i64>> a) {
  const int k = static_cast<int>(a.size());
  if (k == 0) return 1;
  i64 sign = 1;
  i64 prev = 1;
  for (int col = 0; col < k - 1; ++col) {
    int pivot = -1;
    for (int row = col; row < k; ++row)
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      sign = -sign;
    }
    for (int row = col + 1; row < k; ++row) {
      for (int t = col + 1; t < k; ++t) {
        i64 v = checked_sub(checked_mul(a[row][t], a[col][col]),
                            checked_mul(a[row][col], a[col][t]));
        a[row][t] = v / prev;  // exact by the Bareiss identity
      }
      a[row][col] = 0;
    }
    prev = a[col][col];
  }
  return checked_mul(sign, a[k - 1][k - 1]);
}

}  // namespace

ICube extend_by_minors(const ICube& c) {
  auto violation = icube_violation(c);
  require(!violation.has_value(), Errc::invalid_icube,
          violation.has_value() ? violation->c_str() : "");
  const int n = c.dim();
  const int m = c.size();
  require(n >= 2 && m == n - 1, Errc::invalid_icube,
          "minor extension needs an (n-1)-icube in Z^n");

  const i64 norm = c.edge_norm();
  i64 scale;  // N^((n-2)/2), using sqrt(N) when n is odd
  if (n % 2 == 0) {
    scale = ipow_checked(norm, (n - 2) / 2);
  } else {
    i64 root = isqrt(norm);
    require(root * root == norm, Errc::odd_dimension_nonsquare_norm,
            "odd dimension requires a square edge norm");
    scale = ipow_checked(root, n - 2);
  }

  IVec appended(n);
  for (int skip = 0; skip < n; ++skip) {
    std::vector<std::vector<i64>> minor;
    minor.reserve(n - 1);
    for (int row = 0; row < n; ++row) {
      if (row == skip) continue;
      std::vector<i64> r(n - 1);
      for (int col = 0; col < n - 1; ++col) r[col] = c.vectors[col][row];
      minor.push_back(std::move(r));
    }
    i64 det = int_determinant(std::move(minor));
    if ((n + skip + 1) % 2 != 0) det = checked_neg(det);  // (-1)^(n+i) with i = skip+1
    require(det % scale == 0, Errc::internal, "minor not divisible by the norm power");
    appended[skip] = det / scale;
  }

  for (i64 x : appended)
    if (x != 0) {
      if (x < 0)
        for (i64& y : appended) y = checked_neg(y);
      break;
    }

  ICube out = c;
  out.vectors.push_back(std::move(appended));
  require(validate_icube(out), Errc::internal, "minor extension produced an invalid icube");
  return out;
}

ICube cayley_extension(const IVec& v) {
  require(!is_zero_vec(v), Errc::zero_vector, "cannot extend the zero vector");
  const int n = static_cast<int>(v.size());
  require(n == 2 || n == 4 || n == 8, Errc::unsupported_dimension,
          "multiplication-table extension exists for n = 2, 4, 8 only");

  // Entry (index, sign) tables; row r of the result is sign * v[index].
  static constexpr int idx8[8][8] = {
      {0, 1, 2, 3, 4, 5, 6, 7}, {1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 0, 1, 6, 7, 4, 5},
      {3, 2, 1, 0, 7, 6, 5, 4}, {4, 5, 6, 7, 0, 1, 2, 3}, {5, 4, 7, 6, 1, 0, 3, 2},
      {6, 7, 4, 5, 2, 3, 0, 1}, {7, 6, 5, 4, 3, 2, 1, 0}};
  static constexpr int sgn8[8][8] = {
      {+1, +1, +1, +1, +1, +1, +1, +1}, {+1, -1, +1, -1, +1, -1, -1, +1},
      {+1, -1, -1, +1, +1, +1, -1, -1}, {+1, +1, -1, -1, +1, -1, +1, -1},
      {+1, -1, -1, -1, -1, +1, +1, +1}, {+1, +1, -1, +1, -1, -1, -1, +1},
      {+1, +1, +1, -1, -1, +1, -1, -1}, {+1, -1, +1, +1, -1, -1, +1, -1}};

  ICube out;
  out.vectors.reserve(n);
  for (int row = 0; row < n; ++row) {
    IVec w(n);
    for (int col = 0; col < n; ++col)
      w[col] = checked_mul(static_cast<i64>(sgn8[row][col]), v[idx8[row][col]]);
    out.vectors.push_back(std::move(w));
  }
  require(validate_icube(out), Errc::internal, "table rows must form an icube");
  return out;
}

}  // namespace icube4
