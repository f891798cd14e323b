#pragma once

#include <cmath>
#include <numbers>

namespace bell {

/// cot(pi * num / den) for integer num, den > 0, den not dividing num.
/// Reduces num mod den exactly (cot has period pi) and folds the angle into
/// (0, pi/2], where the evaluation is well conditioned even when num/den
/// sits next to an integer.
inline double cot_pi(long long num, long long den) {
  long long r = num % den;
  if (r < 0) r += den;
  double sign = 1.0;
  if (2 * r > den) {  // cot(pi - x) = -cot(x)
    r = den - r;
    sign = -1.0;
  }
  return sign / std::tan(std::numbers::pi * static_cast<double>(r) /
                         static_cast<double>(den));
}

}  // namespace bell
