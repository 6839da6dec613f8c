#include <cstdio>
#include <filesystem>
#include <optional>
#include <vector>

#include "commands.hpp"
#include "nsv/core/errors.hpp"
#include "nsv/core/log.hpp"
#include "run_io.hpp"

namespace nsv::cli {

namespace {

// "radfriends-d7-n400-s3"
std::string stem(const std::string& sampler, std::size_t dim,
                 std::size_t n_live, std::uint64_t seed) {
  return sampler + "-d" + std::to_string(dim) + "-n" + std::to_string(n_live) +
         "-s" + std::to_string(seed);
}

void write_report_files(const std::filesystem::path& dir,
                        const std::string& base, const ShrinkageReport& report,
                        std::uint64_t seed, std::size_t update_interval) {
  write_json_file(dir / ("shrink-" + base + ".json"),
                  shrinkage_report_json(report, seed, update_interval));
  write_series_csv(dir / ("shrink-" + base + "-series.csv"), report.samples);
  write_histogram_csv(dir / ("shrink-" + base + "-hist.csv"), report.samples);
  write_cdf_csv(dir / ("shrink-" + base + "-cdf.csv"), report.samples,
                report.dim, report.n_live);
}

void print_summary_line(const ShrinkageReport& report, const char* label) {
  std::printf("%-24s d=%-3zu ks_p=%-10.4g efficiency=%.4g%%%s\n",
              report.sampler.c_str(), report.dim, report.ks.p_value,
              report.efficiency * 100.0, label);
}

}  // namespace

int cmd_shrink(const ShrinkArgs& args) {
  if (args.iters == 0) {
    log_error("iterations must be positive");
    return 1;
  }
  SamplerSpec spec = parse_sampler_spec(args.sampler);
  if (auto* region = std::get_if<RegionSpec>(&spec.kind)) {
    region->update_interval = args.update_interval;
    region->bootstrap_rounds = args.bootstrap_rounds;
    if (!args.draw_variant.empty()) {
      region->draw_variant = parse_draw_variant(args.draw_variant);
    }
  }
  if (args.dim < 1) {
    log_error("dimension must be at least 1");
    return 1;
  }
  if (args.n_live < 2) {
    log_error("need at least two live points");
    return 1;
  }

  const std::filesystem::path dir(args.common.out);
  std::filesystem::create_directories(dir);

  std::vector<std::optional<ShrinkageReport>> reports(args.repeats);
  run_parallel(args.repeats, args.common.jobs, [&](std::size_t i) {
    reports[i] = run_shrinkage_test(spec, args.dim, args.n_live, args.iters,
                                    args.common.seed + i, args.stall_budget);
  });

  for (std::size_t i = 0; i < args.repeats; ++i) {
    const std::uint64_t seed = args.common.seed + i;
    const ShrinkageReport& report = *reports[i];
    write_report_files(dir, stem(report.sampler, args.dim, args.n_live, seed),
                       report, seed, args.update_interval);
    print_summary_line(report, "");
  }

  if (args.repeats > 1) {
    // Pool the borders across seeds into one aggregate KS verdict.
    ShrinkageReport pooled;
    pooled.sampler = reports[0]->sampler;
    pooled.dim = args.dim;
    pooled.n_live = args.n_live;
    for (const auto& r : reports) {
      pooled.n_iterations += r->n_iterations;
      pooled.n_evaluations += r->n_evaluations;
      pooled.samples.insert(pooled.samples.end(), r->samples.begin(),
                            r->samples.end());
    }
    pooled.efficiency = static_cast<double>(pooled.n_iterations) /
                        static_cast<double>(pooled.n_evaluations);
    pooled.ks = shrinkage_ks(pooled.samples, args.dim, args.n_live);
    nlohmann::json j =
        shrinkage_report_json(pooled, args.common.seed, args.update_interval);
    j["pooled_repeats"] = args.repeats;
    write_json_file(dir / ("shrink-" +
                           stem(pooled.sampler, args.dim, args.n_live,
                                args.common.seed) +
                           "-pooled.json"),
                    j);
    write_histogram_csv(dir / ("shrink-" +
                               stem(pooled.sampler, args.dim, args.n_live,
                                    args.common.seed) +
                               "-pooled-hist.csv"),
                        pooled.samples);
    write_cdf_csv(dir / ("shrink-" +
                         stem(pooled.sampler, args.dim, args.n_live,
                              args.common.seed) +
                         "-pooled-cdf.csv"),
                  pooled.samples, args.dim, args.n_live);
    print_summary_line(pooled, "  (pooled)");
  }
  return 0;
}

}  // namespace nsv::cli
