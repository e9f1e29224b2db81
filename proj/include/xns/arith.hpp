#pragma once

#include <cstdint>
#include <stdexcept>

namespace xns {

// All lattice arithmetic is exact 64-bit. Overflow throws instead of
// wrapping, so a too-large input is a loud error rather than a wrong answer.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

// binomial(a, k) with the linear-system convention: 0 whenever a < k,
// including negative a. Exact and overflow-checked for a >= k >= 0.
std::int64_t binomial(std::int64_t a, std::int64_t k);

}  // namespace xns
