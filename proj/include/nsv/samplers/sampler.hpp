#pragma once

#include <cstdint>
#include <memory>

#include "nsv/core/eval_counter.hpp"
#include "nsv/core/problem.hpp"
#include "nsv/core/rng.hpp"
#include "nsv/core/types.hpp"
#include "nsv/samplers/spec.hpp"

namespace nsv {

inline constexpr std::uint64_t default_stall_budget = 1'000'000;

// Draws replacements uniformly from the prior above a likelihood threshold.
// Stateful across draws within one run (proposal scales, region radii).
class ConstrainedSampler {
 public:
  virtual ~ConstrainedSampler() = default;

  // Only the first n_active live points may be consulted; the caller
  // guarantees they all satisfy log_l > log_l_min. iteration is the 1-based
  // nested sampling step. Throws SamplerStalledError past the eval budget.
  virtual LivePoint draw(const Problem& problem, double log_l_min,
                         const LiveSet& live, std::size_t n_active,
                         std::size_t iteration, RngStream& rng,
                         EvalCounter& counter) = 0;

  // Live-set mutation hooks for samplers that cache derived state.
  virtual void observe_swap(std::size_t /*i*/, std::size_t /*j*/) {}
  virtual void observe_replace(std::size_t /*i*/, const LiveSet& /*live*/) {}
};

std::unique_ptr<ConstrainedSampler> make_sampler(
    const SamplerSpec& spec, std::uint64_t stall_budget = default_stall_budget);

}  // namespace nsv
