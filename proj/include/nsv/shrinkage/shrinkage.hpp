#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "nsv/core/problem.hpp"
#include "nsv/integrator/nested_sampler.hpp"
#include "nsv/samplers/spec.hpp"

namespace nsv {

// One volume-ratio observation from a consecutive dead-point pair:
// t = V_next/V_prev and the per-axis border S = 1 - t^(1/d).
struct ShrinkageSample {
  std::size_t iteration = 0;
  double log_l = 0.0;
  double log_v = 0.0;
  double t = 1.0;
  double s_border = 0.0;
};

struct KSReport {
  std::size_t n = 0;
  double d_stat = 0.0;
  double p_value = 1.0;
};

struct ShrinkageReport {
  std::string sampler;
  std::size_t dim = 0;
  std::size_t n_live = 0;
  std::size_t n_iterations = 0;
  std::vector<ShrinkageSample> samples;
  KSReport ks;
  std::uint64_t n_evaluations = 0;
  double efficiency = 0.0;  // n_iterations / n_evaluations
};

// Maps dead-point likelihoods through the problem's analytic contour volume.
// Throws std::invalid_argument if volumes ever increase along the sequence
// ("invalid dead sequence") or if the problem has no contour evaluator.
std::vector<ShrinkageSample> shrinkage_series(std::span<const DeadPoint> dead,
                                              const Problem& problem);

// P(border < s) = 1 - (1-s)^(d*N) for the largest of N Beta-distributed
// volume ratios, expressed per axis.
double expected_cdf_s(double s, std::size_t d, std::size_t n_live);

// One-sample KS distance of sorted samples against a CDF.
double ks_statistic(std::span<const double> sorted_samples,
                    const std::function<double(double)>& cdf);

// Asymptotic Kolmogorov tail probability.
double ks_p_value(double d_stat, std::size_t n);

// Sorts the borders out of samples and runs the KS comparison against
// expected_cdf_s(., d, n_live).
KSReport shrinkage_ks(std::span<const ShrinkageSample> samples, std::size_t d,
                      std::size_t n_live);

// Fixed-iteration nested sampling run on pyramid(s=100, sigma=1) at
// dimension d, reduced to shrinkage samples and a KS verdict.
ShrinkageReport run_shrinkage_test(
    const SamplerSpec& sampler, std::size_t d, std::size_t n_live,
    std::size_t n_iterations, std::uint64_t seed,
    std::uint64_t stall_budget = default_stall_budget);

}  // namespace nsv
