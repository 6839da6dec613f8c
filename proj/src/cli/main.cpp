#include <algorithm>
#include <cstdio>
#include <exception>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "nsv/core/log.hpp"
#include "nsv/integrator/nested_sampler.hpp"

namespace {

void add_common(CLI::App* cmd, nsv::cli::CommonArgs& args) {
  cmd->add_option("--seed", args.seed, "base RNG seed")->capture_default_str();
  cmd->add_option("--out", args.out, "output directory")
      ->capture_default_str();
  cmd->add_option("--jobs", args.jobs, "parallel repeats")
      ->capture_default_str();
  cmd->set_config("--config", "", "key = value file; flags override");
}

std::string trimmed(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// CLI11 only ingests config files at the root app, so expand the file's
// keys into ordinary long options ourselves before parsing. Keys already
// given explicitly on the command line win over the file.
void expand_config_args(std::vector<std::string>& args) {
  std::string config_path;
  std::set<std::string> given;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.rfind("--", 0) != 0) continue;
    std::string name = a.substr(2);
    if (const auto eq = name.find('='); eq != std::string::npos)
      name.erase(eq);
    given.insert(name);
    if (name != "config") continue;
    if (const auto eq = a.find('='); eq != std::string::npos)
      config_path = a.substr(eq + 1);
    else if (i + 1 < args.size())
      config_path = args[i + 1];
  }
  if (config_path.empty()) return;

  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot read config file: " + config_path);

  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    line = trimmed(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config line is not key = value: " + line);
    const std::string key = trimmed(line.substr(0, eq));
    std::string value = trimmed(line.substr(eq + 1));
    if (key.empty())
      throw std::runtime_error("config line is not key = value: " + line);
    if (value.size() >= 2 && (value.front() == '"' || value.front() == '\'') &&
        value.back() == value.front())
      value = value.substr(1, value.size() - 2);
    if (key == "config" || given.count(key)) continue;
    args.push_back("--" + key + "=" + value);
  }
}

void add_region_knobs(CLI::App* cmd, std::size_t& update_interval,
                      std::size_t& rounds, std::string& draw_variant,
                      std::uint64_t& stall_budget) {
  cmd->add_option("--update-interval", update_interval,
                  "iterations between region radius updates")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--rounds", rounds, "bootstrap rounds for the radius")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  cmd->add_option("--draw-variant", draw_variant,
                  "region candidate scheme: global, near or auto");
  cmd->add_option("--stall-budget", stall_budget,
                  "likelihood evaluations allowed per replacement draw")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nested sampling verification toolkit"};
  app.require_subcommand(1);

  nsv::cli::ShrinkArgs shrink_args;
  CLI::App* shrink = app.add_subcommand(
      "shrink", "run the volume-shrinkage test for a constrained sampler");
  add_common(shrink, shrink_args.common);
  shrink->add_option("--sampler", shrink_args.sampler, "sampler spec")
      ->required();
  shrink->add_option("--dim", shrink_args.dim, "problem dimension")
      ->required();
  shrink->add_option("--live", shrink_args.n_live, "live points")
      ->capture_default_str();
  shrink->add_option("--iters", shrink_args.iters, "iterations per run")
      ->capture_default_str();
  shrink->add_option("--repeats", shrink_args.repeats,
                     "independent seeds, pooled into one extra verdict")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_region_knobs(shrink, shrink_args.update_interval,
                   shrink_args.bootstrap_rounds, shrink_args.draw_variant,
                   shrink_args.stall_budget);

  nsv::cli::IntegrateArgs integrate_args;
  CLI::App* integrate = app.add_subcommand(
      "integrate", "estimate a benchmark evidence over repeated runs");
  add_common(integrate, integrate_args.common);
  integrate->add_option("--problem", integrate_args.problem, "problem name")
      ->required();
  integrate->add_option("--sampler", integrate_args.sampler, "sampler spec")
      ->required();
  integrate->add_option("--live", integrate_args.n_live, "live points")
      ->capture_default_str();
  integrate->add_option("--repeats", integrate_args.repeats, "repeat count")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  integrate
      ->add_option("--tol", integrate_args.tol,
                   "evidence tolerance for termination")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  integrate->add_option("--iters", integrate_args.iters,
                        "fixed iteration count (overrides --tol)");
  integrate->add_flag("--iter-csv", integrate_args.iteration_csv,
                      "also write per-iteration CSVs");
  integrate
      ->add_option("--pyramid-s", integrate_args.pyramid_s,
                   "pyramid slope parameter")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  integrate
      ->add_option("--sigma-preset", integrate_args.sigma_preset,
                   "pyramid scales: unit or multiscale")
      ->capture_default_str();
  add_region_knobs(integrate, integrate_args.update_interval,
                   integrate_args.bootstrap_rounds,
                   integrate_args.draw_variant, integrate_args.stall_budget);

  nsv::cli::ReportArgs report_args;
  CLI::App* report = app.add_subcommand(
      "report", "aggregate run files from a directory into a table");
  add_common(report, report_args.common);

  app.name(argv[0]);
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    expand_config_args(args);
  } catch (const std::exception& e) {
    nsv::log_error(e.what());
    return 1;
  }
  std::reverse(args.begin(), args.end());  // CLI11 consumes from the back
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (shrink->parsed()) return nsv::cli::cmd_shrink(shrink_args);
    if (integrate->parsed()) return nsv::cli::cmd_integrate(integrate_args);
    if (report->parsed()) return nsv::cli::cmd_report(report_args);
  } catch (const nsv::SamplerStalledError& e) {
    nsv::log_error(e.what());
    return 2;
  } catch (const std::exception& e) {
    nsv::log_error(e.what());
    return 1;
  }
  return 0;
}
