#pragma once

#include <cstdint>
#include <stdexcept>

// Overflow-checked 64-bit arithmetic. All width formulas go through these so
// a too-large shape fails loudly instead of wrapping.

namespace gridwidth {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in addition");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in subtraction");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow in multiplication");
  return r;
}

inline uint64_t checked_add_u(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("64-bit overflow in addition");
  return r;
}

inline uint64_t checked_mul_u(uint64_t a, uint64_t b) {
  uint64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("64-bit overflow in multiplication");
  return r;
}

}  // namespace gridwidth
