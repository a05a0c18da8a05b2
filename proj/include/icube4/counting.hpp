#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "icube4/common.hpp"
#include "icube4/enumeration.hpp"

namespace icube4 {

// Count of m-icubes with edge norm 1 (signed partial permutation tuples):
// 8, 48, 192, 384 for m = 1..4. Every f_m factors through these constants.
i64 unit_icube_count(int m);

bool is_prime(i64 n);

inline constexpr i64 kDefaultFactorBound = 10'000'000;

// Deterministic trial-division factorization. Inputs whose factorization
// cannot be certified within the bound are rejected, never guessed.
struct FactoredInteger {
  i64 value = 1;
  std::vector<std::pair<i64, int>> factors;  // (prime, exponent), primes increasing

  static FactoredInteger of(i64 n, i64 trial_bound = kDefaultFactorBound);

  std::vector<i64> divisors() const;              // sorted ascending
  std::vector<i64> square_divisor_roots() const;  // c with c^2 | value, sorted
};

// sigma(p^k) = 1 + p + ... + p^k.
i64 sigma_prime_power(i64 p, int k);

// The odd-prime-power value shared by the normalized 3- and 4-icube counts:
//   ((k+1) p^k (p^2 - 1) - 2 (p^(k+1) - 1)) / (p - 1)^2.
// Throws: even_prime, not_prime, invalid_argument.
i64 normalized_count_odd_prime_power(i64 p, int k);

// Normalized icube count g_m(N) = f_m(N) / f_m(1); multiplicative, with
// value 3 on every positive power of 2, sigma on odd prime powers for m = 1,
// the function above for m = 3, 4, and the split rule for m = 2 depending on
// p mod 4.
i64 count_icubes_normalized(int m, const FactoredInteger& n);
i64 count_icubes_normalized(int m, i64 n);

// f_m(N): number of m-icubes in Z^4 with edge norm N, closed multiplicative
// form. Throws: invalid_argument, factor_bound.
i64 count_icubes_closed(int m, i64 n);

// h(N): primary primitive quaternions of norm N (odd). Equals
// N * prod(1 + 1/p) over primes p | N; h(1) = 1 by convention.
i64 count_primary_primitive_closed(i64 n);

// q(N): primary gamma of norm N (odd) with gamma*i*conj(gamma) primitive.
// Equals N * prod(1 - s_p/p) with s_p = +-1, s_p = p mod 4; q(1) = 1.
i64 count_primary_gamma_closed(i64 n);

// k_m(N): orderly primitive m-icubes of odd edge norm N, as divisor
// convolutions: 2^m sum h(d) h(N/d) for m >= 3, 4 sum q(d) h(N/d) for m = 2.
i64 count_orderly_primitive_closed(int m, i64 n);

// f_m(N) computed the independent way: strip the 2-part (factor 3 when N is
// even), then sum the orderly-primitive counts over square divisors.
// Defined for m = 2, 3, 4.
i64 count_icubes_convolution(int m, i64 n);

struct CountReport {
  i64 N = 0;
  int m = 0;
  i64 closed = 0;
  std::optional<i64> convolution;
  std::optional<i64> brute;
  bool ok = false;
};

class MismatchError : public Error {
 public:
  MismatchError(CountReport report, const std::string& what)
      : Error(Errc::mismatch, what), report_(std::move(report)) {}
  const CountReport& report() const { return report_; }

 private:
  CountReport report_;
};

// Evaluates every applicable method and asserts exact agreement. The brute
// count is only attempted for N within the budget. Throws MismatchError
// (carrying all computed values) on any disagreement.
CountReport cross_check(int m, i64 n, bool with_brute, const EnumBudget& budget = {});

}  // namespace icube4
