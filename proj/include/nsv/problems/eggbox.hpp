#pragma once

#include <span>

namespace nsv {

// log L(x) = (2 + cos(5*pi*x1) * cos(5*pi*x2))^5 on the unit square.
// Range [1, 243] with 18 well-separated peaks. Two dimensions only.
double eggbox_log_l(std::span<const double> x);

}  // namespace nsv
