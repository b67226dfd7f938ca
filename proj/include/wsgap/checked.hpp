#pragma once

#include <cstdint>

#include "wsgap/error.hpp"

// Overflow-checked 64-bit helpers and floor/ceil division for signed values.
namespace wsgap::checked {

inline std::int64_t add(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_add_overflow(x, y, &r)) {
    throw Error(ErrorCode::overflow, "integer overflow in addition");
  }
  return r;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_sub_overflow(x, y, &r)) {
    throw Error(ErrorCode::overflow, "integer overflow in subtraction");
  }
  return r;
}

inline std::int64_t mul(std::int64_t x, std::int64_t y) {
  std::int64_t r;
  if (__builtin_mul_overflow(x, y, &r)) {
    throw Error(ErrorCode::overflow, "integer overflow in multiplication");
  }
  return r;
}

// Division rounding toward negative infinity; d != 0.
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d) noexcept {
  std::int64_t q = n / d;
  return (n % d != 0 && ((n < 0) != (d < 0))) ? q - 1 : q;
}

// Division rounding toward positive infinity; d != 0.
constexpr std::int64_t ceil_div(std::int64_t n, std::int64_t d) noexcept {
  std::int64_t q = n / d;
  return (n % d != 0 && ((n < 0) == (d < 0))) ? q + 1 : q;
}

// Representative of n modulo d in [0, d); d > 0.
constexpr std::int64_t floor_mod(std::int64_t n, std::int64_t d) noexcept {
  std::int64_t r = n % d;
  return r < 0 ? r + d : r;
}

}  // namespace wsgap::checked
