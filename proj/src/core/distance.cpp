#include "nsv/core/distance.hpp"

#include <cmath>
#include <stdexcept>

#include "nsv/kernels/distance_kernels.hpp"

namespace nsv {

double min_dist(std::span<const double> q, const LiveSet& live,
                std::size_t n_active, Norm norm) {
  if (n_active == 0) throw std::invalid_argument("empty live set");
  if (norm == Norm::euclidean) {
    return std::sqrt(kernels::min_sq_dist(live.block(), n_active, q.data()));
  }
  return kernels::min_sup_dist(live.block(), n_active, q.data());
}

double min_dist(std::span<const double> q, const LiveSet& live, Norm norm) {
  return min_dist(q, live, live.size(), norm);
}

std::size_t count_within(std::span<const double> q, const LiveSet& live,
                         std::size_t n_active, double r, Norm norm) {
  if (norm == Norm::euclidean) {
    return kernels::count_lt_sq(live.block(), n_active, q.data(), r * r);
  }
  return kernels::count_lt_sup(live.block(), n_active, q.data(), r);
}

}  // namespace nsv
