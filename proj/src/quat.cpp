#include "icube4/quat.hpp"

#include <algorithm>
#include <numeric>

namespace icube4 {

KElem kmul(KElem a, KElem b) {
  // Quaternion basis product with signs disregarded; abelian.
  static constexpr int table[4][4] = {
      {0, 1, 2, 3},
      {1, 0, 3, 2},
      {2, 3, 0, 1},
      {3, 2, 1, 0},
  };
  return static_cast<KElem>(table[static_cast<int>(a)][static_cast<int>(b)]);
}

char kelem_char(KElem g) {
  static constexpr char c[4] = {'1', 'i', 'j', 'k'};
  return c[static_cast<int>(g)];
}

std::optional<KElem> kelem_from_char(char c) {
  switch (c) {
    case '1': return KElem::One;
    case 'i': return KElem::I;
    case 'j': return KElem::J;
    case 'k': return KElem::K;
    default: return std::nullopt;
  }
}

Quat Quat::from_doubled(i64 d1, i64 di, i64 dj, i64 dk) {
  return from_doubled(std::array<i64, 4>{d1, di, dj, dk});
}

Quat Quat::from_doubled(const std::array<i64, 4>& d) {
  const i64 parity = d[0] & 1;
  for (i64 v : d)
    require((v & 1) == parity, Errc::not_hurwitz,
            "doubled coefficients must share one parity");
  Quat q;
  q.d_ = d;
  return q;
}

Quat Quat::from_coeffs(i64 a, i64 b, i64 c, i64 d) {
  return from_doubled(checked_mul(a, 2), checked_mul(b, 2), checked_mul(c, 2),
                      checked_mul(d, 2));
}

bool Quat::is_zero() const { return d_ == std::array<i64, 4>{0, 0, 0, 0}; }

bool Quat::is_lipschitz() const { return (d_[0] & 1) == 0; }

i64 Quat::norm() const {
  i64 s = 0;
  for (i64 v : d_) s = checked_add(s, checked_mul(v, v));
  // Equal parity makes the sum of four squares divisible by 4.
  return s / 4;
}

Quat Quat::conjugate() const {
  Quat q;
  q.d_ = {d_[0], checked_neg(d_[1]), checked_neg(d_[2]), checked_neg(d_[3])};
  return q;
}

Quat Quat::operator-() const {
  Quat q;
  q.d_ = {checked_neg(d_[0]), checked_neg(d_[1]), checked_neg(d_[2]), checked_neg(d_[3])};
  return q;
}

Quat operator+(const Quat& a, const Quat& b) {
  return Quat::from_doubled(checked_add(a.d_[0], b.d_[0]), checked_add(a.d_[1], b.d_[1]),
                            checked_add(a.d_[2], b.d_[2]), checked_add(a.d_[3], b.d_[3]));
}

Quat operator-(const Quat& a, const Quat& b) {
  return Quat::from_doubled(checked_sub(a.d_[0], b.d_[0]), checked_sub(a.d_[1], b.d_[1]),
                            checked_sub(a.d_[2], b.d_[2]), checked_sub(a.d_[3], b.d_[3]));
}

Quat operator*(const Quat& x, const Quat& y) {
  const auto& a = x.d_;
  const auto& b = y.d_;
  auto term = [](i64 u, i64 v) { return checked_mul(u, v); };
  // Products of doubled coefficients carry a factor 4; halving once leaves
  // the doubled coefficients of the product.
  i64 r0 = checked_sub(checked_sub(checked_sub(term(a[0], b[0]), term(a[1], b[1])),
                                   term(a[2], b[2])),
                       term(a[3], b[3]));
  i64 r1 = checked_sub(checked_add(checked_add(term(a[0], b[1]), term(a[1], b[0])),
                                   term(a[2], b[3])),
                       term(a[3], b[2]));
  i64 r2 = checked_add(checked_add(checked_sub(term(a[0], b[2]), term(a[1], b[3])),
                                   term(a[2], b[0])),
                       term(a[3], b[1]));
  i64 r3 = checked_add(checked_sub(checked_add(term(a[0], b[3]), term(a[1], b[2])),
                                   term(a[2], b[1])),
                       term(a[3], b[0]));
  require((r0 & 1) == 0 && (r1 & 1) == 0 && (r2 & 1) == 0 && (r3 & 1) == 0,
          Errc::internal, "quaternion product not on the half grid");
  return Quat::from_doubled(r0 / 2, r1 / 2, r2 / 2, r3 / 2);
}

Quat operator*(i64 s, const Quat& a) {
  return Quat::from_doubled(checked_mul(s, a.d_[0]), checked_mul(s, a.d_[1]),
                            checked_mul(s, a.d_[2]), checked_mul(s, a.d_[3]));
}

Quat quat_one() { return Quat::from_coeffs(1, 0, 0, 0); }
Quat quat_i() { return Quat::from_coeffs(0, 1, 0, 0); }
Quat quat_j() { return Quat::from_coeffs(0, 0, 1, 0); }
Quat quat_k() { return Quat::from_coeffs(0, 0, 0, 1); }

Quat basis_quat(KElem g) {
  std::array<i64, 4> d{0, 0, 0, 0};
  d[static_cast<int>(g)] = 2;
  return Quat::from_doubled(d);
}

std::span<const Quat> units() {
  static const std::vector<Quat> all = elements_of_norm(1);
  return all;
}

bool is_unit(const Quat& q) { return q.norm() == 1; }

KElem parity_class(const Quat& a) {
  require(a.is_lipschitz(), Errc::not_lipschitz, "parity_class needs integer coefficients");
  require((a.norm() & 1) == 1, Errc::even_norm, "parity_class needs odd norm");
  // Odd norm leaves either exactly one odd coefficient (norm = 1 mod 4) or
  // exactly one even coefficient (norm = 3 mod 4); that position is the class.
  int odd_count = 0;
  int odd_pos = -1, even_pos = -1;
  for (int c = 0; c < 4; ++c) {
    if (((a.doubled()[c] / 2) & 1) != 0) {
      ++odd_count;
      odd_pos = c;
    } else {
      even_pos = c;
    }
  }
  require(odd_count == 1 || odd_count == 3, Errc::internal, "impossible parity pattern");
  return static_cast<KElem>(odd_count == 1 ? odd_pos : even_pos);
}

bool is_primary(const Quat& a) {
  require(!a.is_zero(), Errc::zero, "is_primary of zero");
  require((a.norm() & 1) == 1, Errc::even_norm, "is_primary needs odd norm");
  if (!a.is_lipschitz()) return false;
  if (parity_class(a) != KElem::One) return false;
  i64 doubled_sum = 0;
  for (i64 v : a.doubled()) doubled_sum = checked_add(doubled_sum, v);
  i64 coeff_sum = doubled_sum / 2;
  return ((coeff_sum % 4) + 4) % 4 == 1;
}

static PrimaryAssociate primary_associate(const Quat& a, bool left) {
  require(!a.is_zero(), Errc::zero, "primary associate of zero");
  require((a.norm() & 1) == 1, Errc::even_norm, "primary associate needs odd norm");
  std::optional<PrimaryAssociate> found;
  for (const Quat& eps : units()) {
    Quat cand = left ? eps * a : a * eps;
    if (cand.is_lipschitz() && is_primary(cand)) {
      require(!found.has_value(), Errc::internal, "several primary associates");
      found = PrimaryAssociate{cand, eps};
    }
  }
  require(found.has_value(), Errc::internal, "no primary associate");
  return *found;
}

PrimaryAssociate primary_left_associate(const Quat& a) { return primary_associate(a, true); }
PrimaryAssociate primary_right_associate(const Quat& a) { return primary_associate(a, false); }

static DivRem div_round(const Quat& a, const Quat& b, bool left) {
  require(!b.is_zero(), Errc::division_by_zero, "division by zero quaternion");
  // Exact quotient x = b^-1 a (left) or a b^-1 (right), with doubled
  // coefficients num[c] / den.
  const Quat num = left ? b.conjugate() * a : a * b.conjugate();
  const i64 den = b.norm();
  std::optional<DivRem> best;
  for (int parity = 0; parity <= 1; ++parity) {
    // Per coordinate, the two grid values of this parity bracketing the
    // exact quotient coefficient.
    std::array<std::array<i64, 2>, 4> cand{};
    for (int c = 0; c < 4; ++c) {
      i64 lo = checked_add(
          checked_mul(2, floor_div(checked_sub(num.doubled()[c], checked_mul(parity, den)),
                                   checked_mul(2, den))),
          parity);
      cand[c] = {lo, checked_add(lo, 2)};
    }
    for (int mask = 0; mask < 16; ++mask) {
      Quat q = Quat::from_doubled(cand[0][mask & 1], cand[1][(mask >> 1) & 1],
                                  cand[2][(mask >> 2) & 1], cand[3][(mask >> 3) & 1]);
      Quat r = left ? a - b * q : a - q * b;
      i64 rn = r.norm();
      if (!best || rn < best->rem.norm() ||
          (rn == best->rem.norm() && lex_less(q, best->quot))) {
        best = DivRem{q, r};
      }
    }
  }
  require(best->rem.norm() < den, Errc::internal, "division remainder too large");
  return *best;
}

DivRem div_rem_left(const Quat& a, const Quat& b) { return div_round(a, b, true); }
DivRem div_rem_right(const Quat& a, const Quat& b) { return div_round(a, b, false); }

static std::optional<Quat> exact_quotient(const Quat& a, const Quat& b, bool left) {
  if (b.is_zero()) return std::nullopt;
  const Quat num = left ? b.conjugate() * a : a * b.conjugate();
  const i64 den = b.norm();
  std::array<i64, 4> d;
  for (int c = 0; c < 4; ++c) {
    if (num.doubled()[c] % den != 0) return std::nullopt;
    d[c] = num.doubled()[c] / den;
  }
  const i64 parity = d[0] & 1;
  for (i64 v : d)
    if ((v & 1) != parity) return std::nullopt;
  return Quat::from_doubled(d);
}

std::optional<Quat> left_quotient(const Quat& a, const Quat& b) {
  return exact_quotient(a, b, true);
}

std::optional<Quat> right_quotient(const Quat& a, const Quat& b) {
  return exact_quotient(a, b, false);
}

std::optional<Quat> left_quotient_lipschitz(const Quat& a, const Quat& b) {
  auto q = exact_quotient(a, b, true);
  if (q && !q->is_lipschitz()) return std::nullopt;
  return q;
}

bool left_divides(const Quat& b, const Quat& a) { return left_quotient(a, b).has_value(); }
bool right_divides(const Quat& b, const Quat& a) { return right_quotient(a, b).has_value(); }

// Canonical representative among the one-sided unit multiples of d: the
// primary associate when the norm is odd, otherwise the lexicographically
// least doubled tuple.
static Quat canonical_associate(const Quat& d, bool unit_on_right) {
  if ((d.norm() & 1) == 1)
    return unit_on_right ? primary_right_associate(d).primary
                         : primary_left_associate(d).primary;
  std::optional<Quat> best;
  for (const Quat& eps : units()) {
    Quat cand = unit_on_right ? d * eps : eps * d;
    if (!best || lex_less(cand, *best)) best = cand;
  }
  return *best;
}

Quat gcd_left(const Quat& a0, const Quat& b0) {
  require(!(a0.is_zero() && b0.is_zero()), Errc::both_zero, "gcd of two zeros");
  Quat a = a0, b = b0;
  while (!b.is_zero()) {
    DivRem dr = div_rem_left(a, b);
    a = b;
    b = dr.rem;
  }
  return canonical_associate(a, true);
}

Quat gcd_right(const Quat& a0, const Quat& b0) {
  require(!(a0.is_zero() && b0.is_zero()), Errc::both_zero, "gcd of two zeros");
  Quat a = a0, b = b0;
  while (!b.is_zero()) {
    DivRem dr = div_rem_right(a, b);
    a = b;
    b = dr.rem;
  }
  return canonical_associate(a, false);
}

bool divisible_by_int(const Quat& q, i64 t) {
  require(t > 0, Errc::invalid_argument, "divisor must be positive");
  for (i64 v : q.doubled())
    if (v % t != 0) return false;
  return true;
}

static bool is_prime_i64(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

static Quat extract_prime(const Quat& a, i64 p, bool left) {
  require(p % 2 != 0, Errc::even_prime, "prime extraction needs an odd prime");
  require(is_prime_i64(p), Errc::not_prime, "extraction modulus must be prime");
  require(a.norm() % p == 0, Errc::not_divisor, "p does not divide the norm");
  require(!divisible_by_int(a, p), Errc::p_divides_alpha,
          "p divides every coefficient; the norm-p divisor is not unique");
  Quat d = left ? gcd_left(a, Quat::scalar(p)) : gcd_right(a, Quat::scalar(p));
  require(d.norm() == p, Errc::internal, "prime extraction produced wrong norm");
  return d;  // already primary-normalized by the gcd
}

Quat extract_prime_left(const Quat& a, i64 p) { return extract_prime(a, p, true); }
Quat extract_prime_right(const Quat& a, i64 p) { return extract_prime(a, p, false); }

DyadicFactor factor_dyadic(const Quat& a) {
  require(!a.is_zero(), Errc::zero, "dyadic factorization of zero");
  require(a.is_lipschitz(), Errc::not_lipschitz, "dyadic factorization needs integer coefficients");
  const int power = valuation2(a.norm());
  if (power == 0) return DyadicFactor{0, std::nullopt, a};
  Quat cur = a;
  const Quat one_plus_i = Quat::from_coeffs(1, 1, 0, 0);
  for (int s = 0; s + 1 < power; ++s) {
    auto q = left_quotient_lipschitz(cur, one_plus_i);
    require(q.has_value(), Errc::internal, "missing 1+i factor at norm divisible by 4");
    cur = *q;
  }
  // norm(cur) = 2 mod 4: exactly one of 1+i, 1+j, 1+k comes out on the left
  // with an integral cofactor.
  std::optional<Quat> eta, rest;
  for (const Quat& e : {Quat::from_coeffs(1, 1, 0, 0), Quat::from_coeffs(1, 0, 1, 0),
                        Quat::from_coeffs(1, 0, 0, 1)}) {
    if (auto q = left_quotient_lipschitz(cur, e)) {
      require(!eta.has_value(), Errc::internal, "dyadic eta not unique");
      eta = e;
      rest = *q;
    }
  }
  require(eta.has_value(), Errc::internal, "no dyadic eta found");
  return DyadicFactor{power, eta, *rest};
}

std::vector<Quat> elements_of_norm(i64 n) {
  require(n >= 0, Errc::invalid_argument, "norm must be nonnegative");
  std::vector<Quat> out;
  if (n == 0) {
    out.push_back(Quat{});
    return out;
  }
  const i64 target = checked_mul(4, n);
  std::array<i64, 4> d{};
  // Nested descent over doubled coefficients in increasing order gives a
  // deterministic lexicographic result.
  auto rec = [&](auto&& self, int level, i64 remaining) -> void {
    if (level == 4) {
      if (remaining == 0) out.push_back(Quat::from_doubled(d));
      return;
    }
    i64 bound = isqrt(remaining);
    for (i64 v = -bound; v <= bound; ++v) {
      if (level > 0 && ((v ^ d[0]) & 1) != 0) continue;
      d[level] = v;
      self(self, level + 1, remaining - v * v);
    }
  };
  rec(rec, 0, target);
  return out;
}

bool is_primitive(const Quat& a) {
  require(a.is_lipschitz(), Errc::not_lipschitz, "primitivity needs integer coefficients");
  i64 g = 0;
  for (i64 v : a.doubled()) g = std::gcd(g, v / 2);
  return g == 1;
}

Quat pure_square_root(const Quat& theta) {
  require(theta.is_pure(), Errc::not_pure, "input must have zero real part");
  const i64 n = theta.norm();
  const i64 m = isqrt(n);
  require(m * m == n, Errc::not_square_norm, "norm must be a perfect square");
  require(theta.is_lipschitz() && is_primitive(theta), Errc::not_primitive,
          "input must be primitive");
  std::vector<Quat> sols;
  const Quat i_unit = quat_i();
  for (const Quat& g : elements_of_norm(m))
    if (g * i_unit * g.conjugate() == theta) sols.push_back(g);
  require(!sols.empty(), Errc::internal, "pure square root must exist");
  for (const Quat& g : sols)
    if (g.is_lipschitz() && (g.norm() & 1) == 1 && is_primary(g)) return g;
  Quat best = sols.front();
  for (const Quat& g : sols)
    if (lex_less(g, best)) best = g;
  return best;
}

}  // namespace icube4
