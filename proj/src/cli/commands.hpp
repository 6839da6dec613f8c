#pragma once

#include <cstdint>
#include <string>

namespace nsv::cli {

struct CommonArgs {
  std::uint64_t seed = 0;
  std::string out = "./runs";
  unsigned jobs = 1;
};

struct ShrinkArgs {
  CommonArgs common;
  std::string sampler;
  std::size_t dim = 0;
  std::size_t n_live = 400;
  std::size_t iters = 10000;
  std::size_t repeats = 1;
  std::size_t update_interval = 1;
  std::size_t bootstrap_rounds = 50;
  std::string draw_variant;  // empty keeps the sampler's default
  std::uint64_t stall_budget = 1'000'000;
};

struct IntegrateArgs {
  CommonArgs common;
  std::string problem;
  std::string sampler;
  std::size_t n_live = 400;
  std::size_t repeats = 10;
  double tol = 1e-3;
  std::size_t iters = 0;  // nonzero switches to fixed-iterations mode
  std::size_t update_interval = 1;
  std::size_t bootstrap_rounds = 50;
  std::string draw_variant;
  std::uint64_t stall_budget = 1'000'000;
  bool iteration_csv = false;
  double pyramid_s = 100.0;
  std::string sigma_preset = "unit";  // or "multiscale"
};

struct ReportArgs {
  CommonArgs common;
};

int cmd_shrink(const ShrinkArgs& args);
int cmd_integrate(const IntegrateArgs& args);
int cmd_report(const ReportArgs& args);

}  // namespace nsv::cli
