#include "nsv/integrator/evidence.hpp"

#include <cmath>

#include "nsv/core/logspace.hpp"

namespace nsv {

EvidenceLedger::EvidenceLedger(std::size_t n_live, ShrinkageEstimator estimator)
    : n_live_(n_live), estimator_(estimator), log_z_(neg_inf) {
  const double n = static_cast<double>(n_live_);
  if (estimator_ == ShrinkageEstimator::mean_t) {
    log_shrink_ = std::log(n / (n + 1.0));
    log_first_weight_ = -std::log(n);
  } else {
    log_shrink_ = -1.0 / n;
    log_first_weight_ = std::log(-std::expm1(-1.0 / n));
  }
}

double EvidenceLedger::term_log_weight(std::size_t k) const {
  return static_cast<double>(k - 1) * log_shrink_ + log_first_weight_;
}

void EvidenceLedger::add(double log_l) {
  ++k_;
  log_z_ = logaddexp(log_z_, term_log_weight(k_) + log_l);
}

double EvidenceLedger::log_volume() const {
  return static_cast<double>(k_) * log_shrink_;
}

double accumulate_log_evidence(std::span<const double> dead_log_ls,
                               std::size_t n_live,
                               ShrinkageEstimator estimator) {
  EvidenceLedger ledger(n_live, estimator);
  for (const double log_l : dead_log_ls) ledger.add(log_l);
  return ledger.log_z();
}

Uncertainty reported_uncertainty(std::span<const double> dead_log_ls,
                                 std::size_t n_live,
                                 ShrinkageEstimator estimator) {
  EvidenceLedger ledger(n_live, estimator);
  for (const double log_l : dead_log_ls) ledger.add(log_l);
  const double log_z = ledger.log_z();
  if (std::isinf(log_z)) return {};

  double h = 0.0;
  for (std::size_t k = 1; k <= dead_log_ls.size(); ++k) {
    const double log_l = dead_log_ls[k - 1];
    const double log_p = ledger.term_log_weight(k) + log_l - log_z;
    if (std::isinf(log_p)) continue;  // zero-likelihood term
    h += std::exp(log_p) * (log_l - log_z);
  }
  return {h, std::sqrt(std::max(h, 0.0) / static_cast<double>(n_live))};
}

bool should_terminate(const EvidenceLedger& state, double max_live_log_l,
                      double epsilon) {
  if (std::isinf(epsilon) && epsilon > 0.0) return true;
  const double remaining = max_live_log_l + state.log_volume();
  return remaining <= std::log(epsilon) + state.log_z();
}

}  // namespace nsv
