#include "icube4/counting.hpp"

#include <algorithm>

namespace icube4 {

i64 unit_icube_count(int m) {
  require(m >= 1 && m <= 4, Errc::invalid_argument, "m must be between 1 and 4");
  static constexpr i64 c[5] = {0, 8, 48, 192, 384};
  return c[m];
}

bool is_prime(i64 n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (i64 d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FactoredInteger FactoredInteger::of(i64 n, i64 trial_bound) {
  require(n >= 1, Errc::invalid_argument, "factorization needs a positive integer");
  FactoredInteger out;
  out.value = n;
  i64 rest = n;
  auto push = [&](i64 p) {
    int e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    if (e > 0) out.factors.emplace_back(p, e);
  };
  push(2);
  for (i64 d = 3; d <= trial_bound && d * d <= rest; d += 2) push(d);
  if (rest > 1) {
    // The remaining cofactor has no prime factor below the bound; it is
    // certified prime only when it is below the bound squared.
    require(rest <= checked_mul(trial_bound, trial_bound), Errc::factor_bound,
            "input exceeds the trial-division bound");
    out.factors.emplace_back(rest, 1);
  }
  return out;
}

std::vector<i64> FactoredInteger::divisors() const {
  std::vector<i64> out{1};
  for (const auto& [p, e] : factors) {
    const size_t base = out.size();
    i64 pk = 1;
    for (int t = 1; t <= e; ++t) {
      pk = checked_mul(pk, p);
      for (size_t u = 0; u < base; ++u) out.push_back(checked_mul(out[u], pk));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<i64> FactoredInteger::square_divisor_roots() const {
  FactoredInteger half;
  half.value = 1;
  for (const auto& [p, e] : factors)
    if (e >= 2) half.factors.emplace_back(p, e / 2);
  return half.divisors();
}

i64 sigma_prime_power(i64 p, int k) {
  i64 s = 1, pw = 1;
  for (int t = 1; t <= k; ++t) {
    pw = checked_mul(pw, p);
    s = checked_add(s, pw);
  }
  return s;
}

i64 normalized_count_odd_prime_power(i64 p, int k) {
  require(p != 2, Errc::even_prime, "defined for odd primes only");
  require(is_prime(p), Errc::not_prime, "p must be prime");
  require(k >= 1, Errc::invalid_argument, "exponent must be at least 1");
  const i64 pk = ipow_checked(p, k);
  const i64 num = checked_sub(
      checked_mul(checked_mul(k + 1, pk), checked_sub(checked_mul(p, p), 1)),
      checked_mul(2, checked_sub(checked_mul(p, pk), 1)));
  const i64 den = checked_mul(p - 1, p - 1);
  require(num % den == 0, Errc::internal, "prime-power count must be integral");
  return num / den;
}

static i64 normalized_prime_power(int m, i64 p, int k) {
  if (p == 2) return 3;
  switch (m) {
    case 1: return sigma_prime_power(p, k);
    case 2:
      if (p % 4 == 1) return checked_mul(k + 1, ipow_checked(p, k));
      return normalized_count_odd_prime_power(p, k);
    case 3:
    case 4: return normalized_count_odd_prime_power(p, k);
    default: fail(Errc::invalid_argument, "m must be between 1 and 4");
  }
}

i64 count_icubes_normalized(int m, const FactoredInteger& n) {
  require(m >= 1 && m <= 4, Errc::invalid_argument, "m must be between 1 and 4");
  i64 out = 1;
  for (const auto& [p, e] : n.factors)
    out = checked_mul(out, normalized_prime_power(m, p, e));
  return out;
}

i64 count_icubes_normalized(int m, i64 n) {
  return count_icubes_normalized(m, FactoredInteger::of(n));
}

i64 count_icubes_closed(int m, i64 n) {
  require(n >= 1, Errc::invalid_argument, "edge norm must be positive");
  return checked_mul(unit_icube_count(m), count_icubes_normalized(m, n));
}

i64 count_primary_primitive_closed(i64 n) {
  require(n >= 1, Errc::invalid_argument, "norm must be positive");
  require(n % 2 == 1, Errc::even_input, "defined for odd norms");
  i64 out = 1;
  for (const auto& [p, e] : FactoredInteger::of(n).factors)
    out = checked_mul(out, checked_mul(ipow_checked(p, e - 1), checked_add(p, 1)));
  return out;
}

i64 count_primary_gamma_closed(i64 n) {
  require(n >= 1, Errc::invalid_argument, "norm must be positive");
  require(n % 2 == 1, Errc::even_input, "defined for odd norms");
  i64 out = 1;
  for (const auto& [p, e] : FactoredInteger::of(n).factors) {
    const i64 sp = (p % 4 == 1) ? 1 : -1;
    out = checked_mul(out, checked_mul(ipow_checked(p, e - 1), checked_sub(p, sp)));
  }
  return out;
}

i64 count_orderly_primitive_closed(int m, i64 n) {
  require(m >= 2 && m <= 4, Errc::invalid_argument, "m must be between 2 and 4");
  require(n >= 1, Errc::invalid_argument, "norm must be positive");
  require(n % 2 == 1, Errc::even_input, "defined for odd norms");
  i64 sum = 0;
  for (i64 d : FactoredInteger::of(n).divisors()) {
    const i64 lhs = (m == 2) ? count_primary_gamma_closed(d) : count_primary_primitive_closed(d);
    sum = checked_add(sum, checked_mul(lhs, count_primary_primitive_closed(n / d)));
  }
  return checked_mul(m == 2 ? 4 : ipow_checked(2, m), sum);
}

i64 count_icubes_convolution(int m, i64 n) {
  require(m >= 2 && m <= 4, Errc::invalid_argument, "m must be between 2 and 4");
  require(n >= 1, Errc::invalid_argument, "edge norm must be positive");
  const bool even = (n % 2 == 0);
  i64 odd_part = n;
  while (odd_part % 2 == 0) odd_part /= 2;

  // Orderly count: sum of orderly-primitive counts over square divisors,
  // scaled by the number of possible types 24/(4-m)!.
  i64 orderly = 0;
  for (i64 c : FactoredInteger::of(odd_part).square_divisor_roots())
    orderly = checked_add(orderly, count_orderly_primitive_closed(m, odd_part / (c * c)));
  static constexpr i64 types[5] = {0, 4, 12, 24, 24};  // 24/(4-m)!
  i64 out = checked_mul(types[m], orderly);
  if (even) out = checked_mul(3, out);
  return out;
}

CountReport cross_check(int m, i64 n, bool with_brute, const EnumBudget& budget) {
  CountReport r;
  r.N = n;
  r.m = m;
  r.closed = count_icubes_closed(m, n);
  if (m >= 2) r.convolution = count_icubes_convolution(m, n);
  if (with_brute && n <= budget.max_norm) r.brute = count_icubes_brute(m, n, budget);
  r.ok = (!r.convolution || *r.convolution == r.closed) && (!r.brute || *r.brute == r.closed);
  if (!r.ok)
    throw MismatchError(r, "counting methods disagree for m=" + std::to_string(m) +
                               " N=" + std::to_string(n));
  return r;
}

}  // namespace icube4
