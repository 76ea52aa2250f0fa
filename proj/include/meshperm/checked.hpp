#pragma once

#include <cstdint>

#include "meshperm/error.hpp"

namespace meshperm {

using Count = std::int64_t;

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("64-bit overflow in addition");
  return r;
}

inline Count checked_sub(Count a, Count b) {
  Count r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("64-bit overflow in subtraction");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("64-bit overflow in multiplication");
  return r;
}

}  // namespace meshperm
