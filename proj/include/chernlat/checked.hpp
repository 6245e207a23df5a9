#pragma once

#include <cstdint>
#include <stdexcept>

namespace chernlat {

using Int = std::int64_t;

// Overflow aborts the computation; it never wraps.
namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

}  // namespace checked
}  // namespace chernlat
