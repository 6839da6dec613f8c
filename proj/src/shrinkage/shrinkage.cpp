#include "nsv/shrinkage/shrinkage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "nsv/problems/registry.hpp"

namespace nsv {

std::vector<ShrinkageSample> shrinkage_series(std::span<const DeadPoint> dead,
                                              const Problem& problem) {
  if (!problem.contour_log_volume) {
    throw std::invalid_argument("problem has no analytic contour volume");
  }
  std::vector<ShrinkageSample> samples;
  if (dead.size() < 2) return samples;
  samples.reserve(dead.size() - 1);
  const double d = static_cast<double>(problem.dim);

  double log_v_prev = problem.contour_log_volume(dead[0].log_l);
  for (std::size_t i = 1; i < dead.size(); ++i) {
    const double log_v = problem.contour_log_volume(dead[i].log_l);
    if (log_v > log_v_prev) {
      throw std::invalid_argument("invalid dead sequence: volume increased");
    }
    ShrinkageSample sample;
    sample.iteration = dead[i].iteration;
    sample.log_l = dead[i].log_l;
    sample.log_v = log_v;
    if (log_v == log_v_prev) {  // duplicate likelihood: keep as S = 0
      sample.t = 1.0;
      sample.s_border = 0.0;
    } else {
      const double log_t = log_v - log_v_prev;
      sample.t = std::exp(log_t);
      sample.s_border = -std::expm1(log_t / d);
    }
    samples.push_back(sample);
    log_v_prev = log_v;
  }
  return samples;
}

double expected_cdf_s(double s, std::size_t d, std::size_t n_live) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double dn = static_cast<double>(d) * static_cast<double>(n_live);
  return -std::expm1(dn * std::log1p(-s));
}

double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf) {
  const double n = static_cast<double>(sorted_samples.size());
  double d_stat = 0.0;
  for (std::size_t i = 1; i <= sorted_samples.size(); ++i) {
    const double f = cdf(sorted_samples[i - 1]);
    d_stat = std::max(d_stat, std::fabs(static_cast<double>(i) / n - f));
    d_stat = std::max(d_stat, std::fabs(static_cast<double>(i - 1) / n - f));
  }
  return d_stat;
}

double ks_p_value(double d_stat, std::size_t n) {
  if (d_stat <= 0.0) return 1.0;
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double lambda = (sqrt_n + 0.12 + 0.11 / sqrt_n) * d_stat;
  const double a = -2.0 * lambda * lambda;
  double sum = 0.0;
  double sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = sign * std::exp(a * static_cast<double>(k) *
                                        static_cast<double>(k));
    sum += term;
    if (std::fabs(term) < 1e-12) {
      return std::clamp(2.0 * sum, 0.0, 1.0);
    }
    sign = -sign;
  }
  return 1.0;  // series would not converge: lambda ~ 0, i.e. a perfect fit
}

KSReport shrinkage_ks(std::span<const ShrinkageSample> samples, std::size_t d,
                      std::size_t n_live) {
  std::vector<double> borders;
  borders.reserve(samples.size());
  for (const auto& s : samples) borders.push_back(s.s_border);
  std::sort(borders.begin(), borders.end());
  KSReport report;
  report.n = borders.size();
  report.d_stat = ks_statistic(
      borders, [d, n_live](double s) { return expected_cdf_s(s, d, n_live); });
  report.p_value = ks_p_value(report.d_stat, report.n);
  return report;
}

ShrinkageReport run_shrinkage_test(const SamplerSpec& sampler, std::size_t d,
                                   std::size_t n_live,
                                   std::size_t n_iterations,
                                   std::uint64_t seed,
                                   std::uint64_t stall_budget) {
  const Problem problem = make_problem("pyramid-" + std::to_string(d));

  NSConfig config;
  config.n_live = n_live;
  config.stop = StopRule::fixed(n_iterations);
  config.seed = seed;
  config.stall_budget = stall_budget;
  const NSResult result = ns_run(problem, sampler, config);

  ShrinkageReport report;
  report.sampler = format_sampler_spec(sampler);
  report.dim = d;
  report.n_live = n_live;
  report.n_iterations = result.n_iterations;
  report.samples = shrinkage_series(result.dead_points, problem);
  report.ks = shrinkage_ks(report.samples, d, n_live);
  report.n_evaluations = result.n_evaluations;
  report.efficiency = static_cast<double>(result.n_iterations) /
                      static_cast<double>(result.n_evaluations);
  return report;
}

}  // namespace nsv
