#pragma once

#include "nsv/samplers/sampler.hpp"

namespace nsv {

// sigma * e^{1/n_accepts} when accepts dominate, sigma * e^{-1/n_rejects}
// when rejects do, unchanged on a tie.
double adapt_scale(double sigma, std::uint64_t n_accepts,
                   std::uint64_t n_rejects);

// Random walk from a uniformly chosen live point: spec.steps isotropic
// Gaussian proposals of the current scale, accepted iff inside the cube and
// above the threshold. Out-of-cube proposals are rejected without spending a
// likelihood evaluation. Adaptive mode updates scale_state once per draw.
LivePoint mcmc_draw(const Problem& problem, double log_l_min,
                    const LiveSet& live, std::size_t n_active,
                    const McmcSpec& spec, RngStream& rng, EvalCounter& counter,
                    double& scale_state);

class McmcSampler final : public ConstrainedSampler {
 public:
  explicit McmcSampler(const McmcSpec& spec);

  LivePoint draw(const Problem& problem, double log_l_min, const LiveSet& live,
                 std::size_t n_active, std::size_t, RngStream& rng,
                 EvalCounter& counter) override;

  double scale() const { return scale_; }

 private:
  McmcSpec spec_;
  double scale_;  // persists across draws within a run
};

}  // namespace nsv
