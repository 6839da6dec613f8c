#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "commands.hpp"
#include "nsv/core/log.hpp"
#include "nsv/problems/registry.hpp"
#include "run_io.hpp"

namespace nsv::cli {

namespace {

struct ShrinkRow {
  std::size_t n_runs = 0;
  double sum_ks_d = 0.0;
  double sum_ks_p = 0.0;
  double sum_iters = 0.0;
  double sum_evals = 0.0;
};

struct EvidenceRow {
  std::size_t n_runs = 0;
  std::vector<double> log_zs;
  double sum_err = 0.0;
  double sum_iters = 0.0;
  double sum_evals = 0.0;
};

std::optional<double> lookup_truth(const std::string& problem) {
  try {
    return make_problem(problem).true_log_z;
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
}

}  // namespace

int cmd_report(const ReportArgs& args) {
  const std::filesystem::path dir(args.common.out);
  if (!std::filesystem::is_directory(dir)) {
    log_error("not a directory: " + dir.string());
    return 1;
  }

  // key: sampler|dim|n_live and problem|sampler|n_live
  std::map<std::tuple<std::string, std::size_t, std::size_t>, ShrinkRow>
      shrink_rows;
  std::map<std::tuple<std::string, std::string, std::size_t>, EvidenceRow>
      evidence_rows;
  std::size_t n_json = 0;

  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());

  for (const auto& path : files) {
    ++n_json;
    nlohmann::json j;
    try {
      std::ifstream in(path);
      j = nlohmann::json::parse(in);
      if (j.contains("ks_p") && j.contains("dim")) {
        if (j.contains("pooled_repeats")) continue;  // derived aggregate
        auto& row = shrink_rows[{j.at("sampler").get<std::string>(),
                                 j.at("dim").get<std::size_t>(),
                                 j.at("n_live").get<std::size_t>()}];
        row.n_runs += 1;
        row.sum_ks_d += j.at("ks_d").get<double>();
        row.sum_ks_p += j.at("ks_p").get<double>();
        row.sum_iters += j.at("n_iterations").get<double>();
        row.sum_evals += j.at("n_evaluations").get<double>();
      } else if (j.contains("log_z") && j.contains("seed")) {
        auto& row = evidence_rows[{j.at("problem").get<std::string>(),
                                   j.at("sampler").get<std::string>(),
                                   j.at("n_live").get<std::size_t>()}];
        row.n_runs += 1;
        row.log_zs.push_back(j.at("log_z").get<double>());
        row.sum_err += j.at("log_z_err").get<double>();
        row.sum_iters += j.at("n_iterations").get<double>();
        row.sum_evals += j.at("n_evaluations").get<double>();
      }
      // summaries and anything else are skipped silently
    } catch (const std::exception& e) {
      log_info("warning: skipping " + path.filename().string() + ": " +
               e.what());
    }
  }

  if (n_json == 0) {
    log_error("no run files in " + dir.string());
    return 1;
  }
  if (shrink_rows.empty() && evidence_rows.empty()) {
    log_error("no usable run files in " + dir.string());
    return 1;
  }

  std::ofstream csv(dir / "report.csv", std::ios::binary);
  csv << "kind,problem,sampler,dim,n_live,n_runs,ks_p,mean_log_z,"
         "actual_scatter,scatter_about,mean_reported_err,mean_iterations,"
         "mean_evaluations,efficiency\n";

  if (!shrink_rows.empty()) {
    std::printf("shrinkage tests\n");
    std::printf("%-24s %4s %6s %6s %10s %12s %12s %10s\n", "sampler", "dim",
                "live", "runs", "ks_p", "iterations", "evaluations",
                "efficiency");
    for (const auto& [key, row] : shrink_rows) {
      const auto& [sampler, dim, n_live] = key;
      const double n = static_cast<double>(row.n_runs);
      const double eff = row.sum_iters / row.sum_evals;
      std::printf("%-24s %4zu %6zu %6zu %10.4g %12.0f %12.0f %9.3g%%\n",
                  sampler.c_str(), dim, n_live, row.n_runs, row.sum_ks_p / n,
                  row.sum_iters / n, row.sum_evals / n, eff * 100.0);
      csv << "shrink,pyramid-" << dim << ',' << sampler << ',' << dim << ','
          << n_live << ',' << row.n_runs << ',' << row.sum_ks_p / n << ",,,,,"
          << row.sum_iters / n << ',' << row.sum_evals / n << ',' << eff
          << '\n';
    }
  }

  if (!evidence_rows.empty()) {
    if (!shrink_rows.empty()) std::printf("\n");
    std::printf("evidence benchmarks\n");
    std::printf("%-12s %-24s %6s %6s %12s %10s %10s %12s\n", "problem",
                "sampler", "live", "runs", "mean_log_z", "A", "C",
                "evaluations");
    for (const auto& [key, row] : evidence_rows) {
      const auto& [problem, sampler, n_live] = key;
      const double n = static_cast<double>(row.n_runs);
      double mean = 0.0;
      for (const double z : row.log_zs) mean += z;
      mean /= n;
      const std::optional<double> truth = lookup_truth(problem);
      const double anchor = truth.value_or(mean);
      double sq = 0.0;
      for (const double z : row.log_zs) sq += (z - anchor) * (z - anchor);
      const double scatter =
          std::sqrt(sq / (truth ? n : std::max(n - 1.0, 1.0)));
      const char* about = truth ? "truth" : "mean";
      const double c = row.sum_err / n;
      std::printf("%-12s %-24s %6zu %6zu %12.4f %10.4f %10.4f %12.0f (A about %s)\n",
                  problem.c_str(), sampler.c_str(), n_live, row.n_runs, mean,
                  scatter, c, row.sum_evals / n, about);
      csv << "evidence," << problem << ',' << sampler << ",," << n_live << ','
          << row.n_runs << ",," << mean << ',' << scatter << ',' << about
          << ',' << c << ',' << row.sum_iters / n << ',' << row.sum_evals / n
          << ',' << row.sum_iters / row.sum_evals << '\n';
    }
  }
  return 0;
}

}  // namespace nsv::cli
