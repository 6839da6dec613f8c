#pragma once

#include "nsv/samplers/sampler.hpp"

namespace nsv {

// Draw from the unconstrained prior until log L > log_l_min. One counter
// increment per trial.
LivePoint rejection_draw(const Problem& problem, double log_l_min,
                         RngStream& rng, EvalCounter& counter,
                         std::uint64_t stall_budget = default_stall_budget);

class RejectionSampler final : public ConstrainedSampler {
 public:
  explicit RejectionSampler(std::uint64_t stall_budget)
      : stall_budget_(stall_budget) {}

  LivePoint draw(const Problem& problem, double log_l_min, const LiveSet&,
                 std::size_t, std::size_t, RngStream& rng,
                 EvalCounter& counter) override {
    return rejection_draw(problem, log_l_min, rng, counter, stall_budget_);
  }

 private:
  std::uint64_t stall_budget_;
};

}  // namespace nsv
