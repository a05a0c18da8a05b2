#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace icube4 {

using i64 = std::int64_t;

// Failure modes of the public operations. Every throwing operation documents
// the codes it can raise; anything tagged `internal` is a broken invariant,
// not a caller error.
enum class Errc {
  overflow,
  not_hurwitz,
  not_lipschitz,
  even_norm,
  zero,
  division_by_zero,
  both_zero,
  even_prime,
  not_prime,
  not_divisor,
  p_divides_alpha,
  not_pure,
  not_square_norm,
  not_primitive,
  invalid_icube,
  inconsistent_certificate,
  already_full,
  odd_dimension_nonsquare_norm,
  unsupported_dimension,
  zero_vector,
  even_input,
  invalid_argument,
  factor_bound,
  budget_exceeded,
  mismatch,
  parse_error,
  internal,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

inline void require(bool cond, Errc code, const char* what) {
  if (!cond) fail(code, what);
}

// Exact arithmetic helpers. All quaternion and counting arithmetic funnels
// through these so that overflow is reported, never wrapped.
inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::overflow, "integer addition overflow");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) fail(Errc::overflow, "integer subtraction overflow");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::overflow, "integer multiplication overflow");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

i64 ipow_checked(i64 base, int exp);

// floor(a / b) for b > 0, exact for negative a as well.
inline i64 floor_div(i64 a, i64 b) {
  i64 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// floor(sqrt(n)) computed exactly.
i64 isqrt(i64 n);

// 2-adic valuation of n > 0.
int valuation2(i64 n);

}  // namespace icube4
