#include "nsv/samplers/mcmc.hpp"

#include <cassert>
#include <cmath>

namespace nsv {

double adapt_scale(double sigma, std::uint64_t n_accepts,
                   std::uint64_t n_rejects) {
  assert(n_accepts + n_rejects >= 1);
  if (n_accepts > n_rejects) {
    return sigma * std::exp(1.0 / static_cast<double>(n_accepts));
  }
  if (n_accepts < n_rejects) {
    return sigma * std::exp(-1.0 / static_cast<double>(n_rejects));
  }
  return sigma;
}

LivePoint mcmc_draw(const Problem& problem, double log_l_min,
                    const LiveSet& live, std::size_t n_active,
                    const McmcSpec& spec, RngStream& rng, EvalCounter& counter,
                    double& scale_state) {
  assert(n_active >= 1);
  const std::size_t d = live.dim();
  const std::size_t start = rng.uniform_below(n_active);
  UnitPoint current = live.point(start);
  double current_log_l = live.log_l(start);

  std::vector<double> proposal(d);
  std::uint64_t n_accepts = 0;
  std::uint64_t n_rejects = 0;
  for (std::size_t step = 0; step < spec.steps; ++step) {
    bool inside = true;
    for (std::size_t j = 0; j < d; ++j) {
      proposal[j] = current.coords[j] + scale_state * rng.normal();
      inside = inside && proposal[j] >= 0.0 && proposal[j] <= 1.0;
    }
    if (!inside) {  // zero prior outside; no likelihood call
      ++n_rejects;
      continue;
    }
    const double log_l = eval_log_l(problem, proposal, counter);
    if (log_l > log_l_min) {
      current.coords.swap(proposal);
      current_log_l = log_l;
      ++n_accepts;
    } else {
      ++n_rejects;
    }
  }
  if (std::holds_alternative<McmcScaleAdaptive>(spec.scale)) {
    scale_state = adapt_scale(scale_state, n_accepts, n_rejects);
  }
  return {std::move(current), current_log_l};
}

McmcSampler::McmcSampler(const McmcSpec& spec) : spec_(spec) {
  if (const auto* fixed = std::get_if<McmcScaleFixed>(&spec_.scale)) {
    scale_ = fixed->sigma;
  } else {
    scale_ = std::get<McmcScaleAdaptive>(spec_.scale).initial;
  }
}

LivePoint McmcSampler::draw(const Problem& problem, double log_l_min,
                            const LiveSet& live, std::size_t n_active,
                            std::size_t, RngStream& rng,
                            EvalCounter& counter) {
  return mcmc_draw(problem, log_l_min, live, n_active, spec_, rng, counter,
                   scale_);
}

}  // namespace nsv
