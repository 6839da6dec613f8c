#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <vector>

#include "commands.hpp"
#include "nsv/core/log.hpp"
#include "nsv/problems/registry.hpp"
#include "run_io.hpp"

namespace nsv::cli {

namespace {

struct RunRecord {
  NSResult result;
  double wall_seconds = 0.0;
};

}  // namespace

int cmd_integrate(const IntegrateArgs& args) {
  ProblemOptions options;
  options.pyramid_s = args.pyramid_s;
  if (args.sigma_preset == "multiscale") {
    options.sigma_preset = SigmaPreset::multiscale;
  } else if (args.sigma_preset != "unit") {
    log_error("unknown sigma preset: " + args.sigma_preset);
    return 1;
  }
  const Problem problem = make_problem(args.problem, options);
  SamplerSpec spec = parse_sampler_spec(args.sampler);
  if (auto* region = std::get_if<RegionSpec>(&spec.kind)) {
    region->update_interval = args.update_interval;
    region->bootstrap_rounds = args.bootstrap_rounds;
    if (!args.draw_variant.empty()) {
      region->draw_variant = parse_draw_variant(args.draw_variant);
    }
  }
  if (args.n_live < 2) {
    log_error("need at least two live points");
    return 1;
  }
  if (args.repeats < 1) {
    log_error("repeats must be positive");
    return 1;
  }

  NSConfig config;
  config.n_live = args.n_live;
  config.stop = args.iters > 0 ? StopRule::fixed(args.iters)
                               : StopRule::tolerance(args.tol);
  config.stall_budget = args.stall_budget;

  const std::filesystem::path dir(args.common.out);
  std::filesystem::create_directories(dir);
  const std::string sampler_label = format_sampler_spec(spec);

  std::vector<std::optional<RunRecord>> runs(args.repeats);
  run_parallel(args.repeats, args.common.jobs, [&](std::size_t i) {
    NSConfig run_config = config;
    run_config.seed = args.common.seed + i;
    const auto t0 = std::chrono::steady_clock::now();
    NSResult result = ns_run(problem, spec, run_config);
    const std::chrono::duration<double> elapsed =
        std::chrono::steady_clock::now() - t0;
    runs[i] = RunRecord{std::move(result), elapsed.count()};
  });

  double sum_log_z = 0.0;
  double sum_err = 0.0;
  double sum_evals = 0.0;
  for (std::size_t i = 0; i < args.repeats; ++i) {
    const std::uint64_t seed = args.common.seed + i;
    const RunRecord& run = *runs[i];
    nlohmann::json j{{"problem", args.problem},
                     {"sampler", sampler_label},
                     {"seed", seed},
                     {"n_live", args.n_live},
                     {"log_z", run.result.log_z},
                     {"log_z_err", run.result.log_z_err},
                     {"h", run.result.information_h},
                     {"n_iterations", run.result.n_iterations},
                     {"n_evaluations", run.result.n_evaluations},
                     {"wall_seconds", run.wall_seconds}};
    if (run.result.hit_max_iterations) j["hit_max_iterations"] = true;
    const std::string base = args.problem + "-" + sampler_label + "-n" +
                             std::to_string(args.n_live) + "-s" +
                             std::to_string(seed);
    write_json_file(dir / ("run-" + base + ".json"), j);
    if (args.iteration_csv) {
      write_iteration_csv(dir / ("run-" + base + "-iterations.csv"),
                          run.result.dead_points);
    }
    sum_log_z += run.result.log_z;
    sum_err += run.result.log_z_err;
    sum_evals += static_cast<double>(run.result.n_evaluations);
  }

  const double n = static_cast<double>(args.repeats);
  const double mean_log_z = sum_log_z / n;
  const double mean_err = sum_err / n;

  // Scatter about the truth when it is known, else about the sample mean.
  double sq_sum = 0.0;
  const double anchor = problem.true_log_z.value_or(mean_log_z);
  for (const auto& run : runs) {
    const double dev = run->result.log_z - anchor;
    sq_sum += dev * dev;
  }
  const double divisor =
      problem.true_log_z ? n : std::max(n - 1.0, 1.0);
  const double scatter = std::sqrt(sq_sum / divisor);

  nlohmann::json summary{
      {"problem", args.problem},
      {"sampler", sampler_label},
      {"n_live", args.n_live},
      {"n_repeats", args.repeats},
      {"mean_log_z", mean_log_z},
      {"actual_scatter", scatter},
      {"scatter_about", problem.true_log_z ? "truth" : "mean"},
      {"mean_reported_err", mean_err},
      {"mean_evaluations", sum_evals / n}};
  write_json_file(dir / ("summary-" + args.problem + "-" + sampler_label +
                         "-n" + std::to_string(args.n_live) + ".json"),
                  summary);

  if (problem.true_log_z) {
    std::printf(
        "%s %s n_live=%zu: mean log_z = %.4f +- %.4f (reported), "
        "A = %.4f (scatter about true %.4f), evals = %.3g\n",
        args.problem.c_str(), sampler_label.c_str(), args.n_live, mean_log_z,
        mean_err, scatter, *problem.true_log_z, sum_evals / n);
  } else {
    std::printf(
        "%s %s n_live=%zu: mean log_z = %.4f +- %.4f (reported), "
        "sd = %.4f (no reference value), evals = %.3g\n",
        args.problem.c_str(), sampler_label.c_str(), args.n_live, mean_log_z,
        mean_err, scatter, sum_evals / n);
  }
  return 0;
}

}  // namespace nsv::cli
