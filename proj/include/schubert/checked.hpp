#pragma once

#include <cstdint>
#include <stdexcept>

namespace schubert {

/// Structure constants and class coefficients. Arithmetic on them goes
/// through the checked helpers below; overflow throws instead of wrapping.
using Coefficient = std::int64_t;

inline Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in addition");
  return r;
}

inline Coefficient checked_sub(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in subtraction");
  return r;
}

inline Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in multiplication");
  return r;
}

}  // namespace schubert
