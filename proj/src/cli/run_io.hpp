#pragma once

#include <filesystem>
#include <functional>
#include <span>
#include <string>

#include "json.hpp"
#include "nsv/integrator/nested_sampler.hpp"
#include "nsv/shrinkage/shrinkage.hpp"

namespace nsv::cli {

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& value);

// Columns: iteration,log_l,log_v,t,s
void write_series_csv(const std::filesystem::path& path,
                      std::span<const ShrinkageSample> samples);

// 60 equal-width bins over [0, max(S) * 1.05]; columns bin_center,count.
void write_histogram_csv(const std::filesystem::path& path,
                         std::span<const ShrinkageSample> samples);

// Columns: s,empirical_cdf,theoretical_cdf (one row per sorted border).
void write_cdf_csv(const std::filesystem::path& path,
                   std::span<const ShrinkageSample> samples, std::size_t dim,
                   std::size_t n_live);

// Columns: k,log_l,n_evals
void write_iteration_csv(const std::filesystem::path& path,
                         std::span<const DeadPoint> dead);

nlohmann::json shrinkage_report_json(const ShrinkageReport& report,
                                     std::uint64_t seed,
                                     std::size_t update_interval);

// Runs independent tasks 0..n_tasks over `jobs` threads; task exceptions are
// rethrown (first one wins) after all workers finish. jobs == 1 runs inline.
void run_parallel(std::size_t n_tasks, unsigned jobs,
                  const std::function<void(std::size_t)>& task);

}  // namespace nsv::cli
