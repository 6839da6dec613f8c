#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace nsv {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// log(e^a + e^b) without leaving log space. Tolerates -inf operands.
inline double logaddexp(double a, double b) {
  if (std::isinf(a) && a < 0) return b;
  if (std::isinf(b) && b < 0) return a;
  const double m = std::max(a, b);
  return m + std::log1p(std::exp(std::min(a, b) - m));
}

}  // namespace nsv
