#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>

#include "nsv/core/eval_counter.hpp"

namespace nsv {

// A benchmark problem on the unit hypercube. log_likelihood takes unit-cube
// coordinates; contour_log_volume, where known analytically, maps a
// log-likelihood threshold to the log prior volume enclosed by that contour.
struct Problem {
  std::string name;
  std::size_t dim = 0;
  std::function<double(std::span<const double>)> log_likelihood;
  std::optional<double> true_log_z;
  std::function<double(double)> contour_log_volume;  // may be empty
};

inline double eval_log_l(const Problem& problem, std::span<const double> x,
                         EvalCounter& counter) {
  counter.increment();
  return problem.log_likelihood(x);
}

}  // namespace nsv
