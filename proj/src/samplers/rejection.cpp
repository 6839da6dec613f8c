#include "nsv/samplers/rejection.hpp"

#include "nsv/core/errors.hpp"

namespace nsv {

LivePoint rejection_draw(const Problem& problem, double log_l_min,
                         RngStream& rng, EvalCounter& counter,
                         std::uint64_t stall_budget) {
  for (std::uint64_t trial = 0; trial < stall_budget; ++trial) {
    UnitPoint candidate = prior_sample(rng, problem.dim);
    const double log_l = eval_log_l(problem, candidate.coords, counter);
    if (log_l > log_l_min) return {std::move(candidate), log_l};
  }
  throw SamplerStalledError("rejection exceeded the evaluation budget");
}

}  // namespace nsv
