#pragma once

#include <cstddef>
#include <span>

#include "nsv/core/types.hpp"

namespace nsv {

enum class Norm { euclidean, supremum };

// Distance from q to the nearest of the first n_active live points.
// Throws std::invalid_argument on an empty range.
double min_dist(std::span<const double> q, const LiveSet& live,
                std::size_t n_active, Norm norm);
double min_dist(std::span<const double> q, const LiveSet& live, Norm norm);

// Number of the first n_active live points strictly within radius r of q.
std::size_t count_within(std::span<const double> q, const LiveSet& live,
                         std::size_t n_active, double r, Norm norm);

}  // namespace nsv
