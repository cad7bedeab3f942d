#ifndef BRAIDS_CHECKED_INT_HPP
#define BRAIDS_CHECKED_INT_HPP

#include <cstdint>

#include "braids/errors.hpp"

namespace braids {

// Exact integer coefficients: 64-bit with overflow checks that throw,
// never wrap.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticError("integer overflow in add");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticError("integer overflow in mul");
  return r;
}

inline std::int64_t checked_neg(std::int64_t a) {
  std::int64_t r;
  if (__builtin_sub_overflow(std::int64_t{0}, a, &r)) throw ArithmeticError("integer overflow in neg");
  return r;
}

}  // namespace braids

#endif
