#include "nsv/integrator/nested_sampler.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "nsv/core/log.hpp"
#include "nsv/core/logspace.hpp"

namespace nsv {

namespace {

NSResult assemble(const EvidenceLedger& ledger, std::vector<DeadPoint> dead,
                  const LiveSet& live, const NSConfig& config,
                  bool add_live_mass, bool hit_max) {
  NSResult result;
  result.dead_points = std::move(dead);
  result.n_iterations = result.dead_points.size();
  result.final_live.reserve(live.size());
  for (std::size_t i = 0; i < live.size(); ++i) {
    result.final_live.push_back(live.live_point(i));
  }
  result.log_z = ledger.log_z();
  if (add_live_mass) {
    const double log_w =
        ledger.log_volume() - std::log(static_cast<double>(live.size()));
    for (std::size_t i = 0; i < live.size(); ++i) {
      result.log_z = logaddexp(result.log_z, log_w + live.log_l(i));
    }
  }
  std::vector<double> dead_log_ls;
  dead_log_ls.reserve(result.dead_points.size());
  for (const DeadPoint& p : result.dead_points) dead_log_ls.push_back(p.log_l);
  const Uncertainty u = reported_uncertainty(dead_log_ls, config.n_live,
                                             config.shrinkage_estimator);
  result.information_h = u.information_h;
  result.log_z_err = u.log_z_err;
  result.hit_max_iterations = hit_max;
  return result;
}

}  // namespace

NSResult ns_run(const Problem& problem, const SamplerSpec& spec,
                const NSConfig& config) {
  assert(problem.dim >= 1 && config.n_live >= 2);
  assert(config.stop.kind != StopRule::Kind::fixed_iterations ||
         config.stop.count >= 1);

  RngStream rng(config.seed);
  EvalCounter counter;
  const std::size_t n = config.n_live;

  std::vector<LivePoint> initial;
  initial.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    UnitPoint p = prior_sample(rng, problem.dim);
    const double log_l = eval_log_l(problem, p.coords, counter);
    initial.push_back({std::move(p), log_l});
  }
  LiveSet live(std::move(initial));

  auto sampler = make_sampler(spec, config.stall_budget);
  EvidenceLedger ledger(n, config.shrinkage_estimator);
  std::vector<DeadPoint> dead;
  const bool tolerance_mode =
      config.stop.kind == StopRule::Kind::evidence_tolerance;
  bool hit_max = false;

  for (std::size_t k = 1;; ++k) {
    if (tolerance_mode) {
      if (should_terminate(ledger, live.max_log_l(), config.stop.epsilon)) {
        break;
      }
      if (k > config.max_iterations) {
        hit_max = true;
        log_info("warning: max_iterations reached before the evidence "
                 "tolerance; result is truncated");
        break;
      }
    } else if (k > config.stop.count) {
      break;
    }

    const std::size_t worst = live.argmin_log_l();
    const double log_l_k = live.log_l(worst);
    dead.push_back({k, log_l_k, live.point(worst), counter.n_evaluations});
    ledger.add(log_l_k);

    // Move the doomed point out of the survivors' prefix; samplers only see
    // the n-1 points strictly above the threshold.
    live.swap_points(worst, n - 1);
    sampler->observe_swap(worst, n - 1);

    LivePoint fresh;
    try {
      fresh = sampler->draw(problem, log_l_k, live, n - 1, k, rng, counter);
    } catch (const SamplerStalledError& e) {
      NSResult partial = assemble(ledger, std::move(dead), live, config,
                                  /*add_live_mass=*/false, hit_max);
      partial.n_evaluations = counter.n_evaluations;
      throw NsRunStalledError(e.what(), std::move(partial));
    }
    if (!(fresh.log_l > log_l_k)) {
      throw std::logic_error("sampler returned a point at or below the threshold");
    }
    live.replace(n - 1, std::move(fresh));
    sampler->observe_replace(n - 1, live);
  }

  NSResult result = assemble(ledger, std::move(dead), live, config,
                             /*add_live_mass=*/tolerance_mode, hit_max);
  result.n_evaluations = counter.n_evaluations;
  return result;
}

}  // namespace nsv
