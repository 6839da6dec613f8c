#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "nsv/core/errors.hpp"
#include "nsv/core/problem.hpp"
#include "nsv/core/types.hpp"
#include "nsv/integrator/evidence.hpp"
#include "nsv/samplers/sampler.hpp"

namespace nsv {

struct DeadPoint {
  std::size_t iteration = 0;  // 1-based removal step k
  double log_l = 0.0;
  UnitPoint point;
  std::uint64_t n_evals_at_removal = 0;
};

struct StopRule {
  enum class Kind { fixed_iterations, evidence_tolerance };
  Kind kind = Kind::evidence_tolerance;
  std::size_t count = 0;
  double epsilon = 1e-3;

  static StopRule fixed(std::size_t n) {
    return {Kind::fixed_iterations, n, 0.0};
  }
  static StopRule tolerance(double epsilon) {
    return {Kind::evidence_tolerance, 0, epsilon};
  }
};

struct NSConfig {
  std::size_t n_live = 400;
  StopRule stop = StopRule::tolerance(1e-3);
  std::uint64_t seed = 0;
  std::size_t max_iterations = 1'000'000;  // tolerance-mode safety cap
  ShrinkageEstimator shrinkage_estimator = ShrinkageEstimator::mean_t;
  std::uint64_t stall_budget = default_stall_budget;
};

struct NSResult {
  double log_z = 0.0;
  double log_z_err = 0.0;
  double information_h = 0.0;
  std::vector<DeadPoint> dead_points;
  std::size_t n_iterations = 0;
  std::uint64_t n_evaluations = 0;
  std::vector<LivePoint> final_live;
  bool hit_max_iterations = false;
};

// A stall mid-run; carries everything accumulated up to the failing draw.
class NsRunStalledError : public SamplerStalledError {
 public:
  NsRunStalledError(const std::string& message, NSResult partial)
      : SamplerStalledError(Verbatim{}, message),
        partial_(std::make_shared<NSResult>(std::move(partial))) {}

  const NSResult& partial() const { return *partial_; }

 private:
  std::shared_ptr<NSResult> partial_;  // shared: exception copies are noexcept
};

// The nested sampling loop. In evidence_tolerance mode the final live set's
// mass (V_final/N per point) is folded into log_z; in fixed_iterations mode
// only the dead sequence counts, so shrinkage statistics stay untouched.
NSResult ns_run(const Problem& problem, const SamplerSpec& spec,
                const NSConfig& config);

}  // namespace nsv
