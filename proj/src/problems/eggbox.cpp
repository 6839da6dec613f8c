#include "nsv/problems/eggbox.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nsv {

double eggbox_log_l(std::span<const double> x) {
  if (x.size() != 2) throw std::invalid_argument("eggbox is two-dimensional");
  const double base =
      2.0 + std::cos(5.0 * std::numbers::pi * x[0]) *
                std::cos(5.0 * std::numbers::pi * x[1]);
  const double b2 = base * base;
  return b2 * b2 * base;
}

}  // namespace nsv
