#include "run_io.hpp"

#include <algorithm>
#include <atomic>
#include <cinttypes>
#include <cstdio>
#include <exception>
#include <fstream>
#include <mutex>
#include <thread>
#include <vector>

namespace nsv::cli {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);  // binary keeps LF endings
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  return out;
}

// Shortest representation that round-trips a double.
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  double parsed = 0.0;
  for (int prec = 15; prec <= 16; ++prec) {
    char shorter[32];
    std::snprintf(shorter, sizeof shorter, "%.*g", prec, v);
    std::sscanf(shorter, "%lg", &parsed);
    if (parsed == v) return shorter;
  }
  return buf;
}

}  // namespace

void write_json_file(const std::filesystem::path& path,
                     const nlohmann::json& value) {
  auto out = open_out(path);
  out << value.dump(2) << '\n';
}

void write_series_csv(const std::filesystem::path& path,
                      std::span<const ShrinkageSample> samples) {
  auto out = open_out(path);
  out << "iteration,log_l,log_v,t,s\n";
  for (const auto& s : samples) {
    out << s.iteration << ',' << num(s.log_l) << ',' << num(s.log_v) << ','
        << num(s.t) << ',' << num(s.s_border) << '\n';
  }
}

void write_histogram_csv(const std::filesystem::path& path,
                         std::span<const ShrinkageSample> samples) {
  constexpr std::size_t n_bins = 60;
  double s_max = 0.0;
  for (const auto& s : samples) s_max = std::max(s_max, s.s_border);
  const double hi = s_max > 0.0 ? s_max * 1.05 : 1.0;
  std::vector<std::size_t> counts(n_bins, 0);
  for (const auto& s : samples) {
    auto bin = static_cast<std::size_t>(s.s_border / hi * n_bins);
    counts[std::min(bin, n_bins - 1)] += 1;
  }
  auto out = open_out(path);
  out << "bin_center,count\n";
  for (std::size_t b = 0; b < n_bins; ++b) {
    const double center = (static_cast<double>(b) + 0.5) * hi / n_bins;
    out << num(center) << ',' << counts[b] << '\n';
  }
}

void write_cdf_csv(const std::filesystem::path& path,
                   std::span<const ShrinkageSample> samples, std::size_t dim,
                   std::size_t n_live) {
  std::vector<double> borders;
  borders.reserve(samples.size());
  for (const auto& s : samples) borders.push_back(s.s_border);
  std::sort(borders.begin(), borders.end());
  auto out = open_out(path);
  out << "s,empirical_cdf,theoretical_cdf\n";
  const double n = static_cast<double>(borders.size());
  for (std::size_t i = 0; i < borders.size(); ++i) {
    out << num(borders[i]) << ',' << num(static_cast<double>(i + 1) / n) << ','
        << num(expected_cdf_s(borders[i], dim, n_live)) << '\n';
  }
}

void write_iteration_csv(const std::filesystem::path& path,
                         std::span<const DeadPoint> dead) {
  auto out = open_out(path);
  out << "k,log_l,n_evals\n";
  for (const auto& p : dead) {
    out << p.iteration << ',' << num(p.log_l) << ',' << p.n_evals_at_removal
        << '\n';
  }
}

nlohmann::json shrinkage_report_json(const ShrinkageReport& report,
                                     std::uint64_t seed,
                                     std::size_t update_interval) {
  return nlohmann::json{{"sampler", report.sampler},
                        {"dim", report.dim},
                        {"n_live", report.n_live},
                        {"n_iterations", report.n_iterations},
                        {"n_evaluations", report.n_evaluations},
                        {"efficiency", report.efficiency},
                        {"ks_d", report.ks.d_stat},
                        {"ks_p", report.ks.p_value},
                        {"seed", seed},
                        {"update_interval", update_interval}};
}

void run_parallel(std::size_t n_tasks, unsigned jobs,
                  const std::function<void(std::size_t)>& task) {
  if (jobs <= 1 || n_tasks <= 1) {
    for (std::size_t i = 0; i < n_tasks; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n_tasks) return;
      try {
        task(i);
      } catch (...) {
        const std::lock_guard lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  const unsigned n_workers = std::min<unsigned>(jobs, n_tasks);
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace nsv::cli
