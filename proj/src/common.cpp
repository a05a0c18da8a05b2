#include "icube4/common.hpp"

#include <cmath>

namespace icube4 {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::overflow: return "Overflow";
    case Errc::not_hurwitz: return "NotHurwitz";
    case Errc::not_lipschitz: return "NotLipschitz";
    case Errc::even_norm: return "EvenNorm";
    case Errc::zero: return "Zero";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::both_zero: return "BothZero";
    case Errc::even_prime: return "EvenPrime";
    case Errc::not_prime: return "NotPrime";
    case Errc::not_divisor: return "NotDivisor";
    case Errc::p_divides_alpha: return "PDividesAlpha";
    case Errc::not_pure: return "NotPure";
    case Errc::not_square_norm: return "NotSquareNorm";
    case Errc::not_primitive: return "NotPrimitive";
    case Errc::invalid_icube: return "InvalidICube";
    case Errc::inconsistent_certificate: return "InconsistentCertificate";
    case Errc::already_full: return "AlreadyFull";
    case Errc::odd_dimension_nonsquare_norm: return "OddDimensionNonsquareNorm";
    case Errc::unsupported_dimension: return "UnsupportedDimension";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::even_input: return "EvenInput";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::factor_bound: return "FactorBound";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::mismatch: return "Mismatch";
    case Errc::parse_error: return "ParseError";
    case Errc::internal: return "Internal";
  }
  return "Unknown";
}

i64 ipow_checked(i64 base, int exp) {
  require(exp >= 0, Errc::invalid_argument, "negative exponent");
  i64 r = 1;
  for (int t = 0; t < exp; ++t) r = checked_mul(r, base);
  return r;
}

i64 isqrt(i64 n) {
  require(n >= 0, Errc::invalid_argument, "isqrt of negative value");
  if (n == 0) return 0;
  i64 r = static_cast<i64>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int valuation2(i64 n) {
  require(n > 0, Errc::invalid_argument, "valuation2 needs n > 0");
  int v = 0;
  while ((n & 1) == 0) {
    n >>= 1;
    ++v;
  }
  return v;
}

}  // namespace icube4
