#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nsv {

// Deterministic stand-in for the volume ratio t = V_k/V_{k-1}:
// mean_t uses <t> = N/(N+1), mean_log_t uses <ln t> = -1/N.
enum class ShrinkageEstimator { mean_t, mean_log_t };

// Streaming evidence sum: term k carries weight V_{k-1} - V_k collapsed to
// the printed form (1 - 1/(N+1))^(k-1) / N under mean_t. Everything stays in
// log space; -inf likelihoods contribute nothing.
class EvidenceLedger {
 public:
  explicit EvidenceLedger(std::size_t n_live,
                          ShrinkageEstimator estimator = ShrinkageEstimator::mean_t);

  void add(double log_l);

  double log_z() const { return log_z_; }
  // Log prior volume remaining after the terms added so far.
  double log_volume() const;
  std::size_t n_terms() const { return k_; }
  std::size_t n_live() const { return n_live_; }

  // Log weight of term k (1-based), independent of the likelihood.
  double term_log_weight(std::size_t k) const;

 private:
  std::size_t n_live_;
  ShrinkageEstimator estimator_;
  std::size_t k_ = 0;
  double log_z_;
  double log_shrink_;       // log t of one step
  double log_first_weight_; // log weight of term 1
};

double accumulate_log_evidence(std::span<const double> dead_log_ls,
                               std::size_t n_live,
                               ShrinkageEstimator estimator = ShrinkageEstimator::mean_t);

struct Uncertainty {
  double information_h = 0.0;
  double log_z_err = 0.0;
};

// H = sum_k w_k (L_k / Z)(log L_k - log Z) over the dead sequence;
// log_z_err = sqrt(max(H, 0) / N).
Uncertainty reported_uncertainty(std::span<const double> dead_log_ls,
                                 std::size_t n_live,
                                 ShrinkageEstimator estimator = ShrinkageEstimator::mean_t);

// Remaining-evidence bound: stop once the best live point filling the whole
// remaining volume could no longer move log Z by more than epsilon.
bool should_terminate(const EvidenceLedger& state, double max_live_log_l,
                      double epsilon);

}  // namespace nsv
