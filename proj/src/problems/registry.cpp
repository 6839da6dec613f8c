#include "nsv/problems/registry.hpp"

#include <charconv>
#include <stdexcept>

#include "nsv/problems/eggbox.hpp"
#include "nsv/problems/loggamma.hpp"
#include "nsv/problems/pyramid.hpp"

namespace nsv {

namespace {

std::size_t parse_dim(const std::string& name, std::size_t prefix_len) {
  const std::string tail = name.substr(prefix_len);
  std::size_t d = 0;
  const auto [ptr, ec] =
      std::from_chars(tail.data(), tail.data() + tail.size(), d);
  if (ec != std::errc{} || ptr != tail.data() + tail.size() || d == 0) {
    throw std::invalid_argument("unknown problem: " + name);
  }
  return d;
}

}  // namespace

Problem make_problem(const std::string& name, const ProblemOptions& options) {
  Problem p;
  p.name = name;
  if (name.rfind("pyramid-", 0) == 0) {
    p.dim = parse_dim(name, 8);
    PyramidParams params;
    params.s = options.pyramid_s;
    params.sigmas = options.sigma_preset == SigmaPreset::multiscale
                        ? multiscale_sigmas(p.dim)
                        : unit_sigmas(p.dim);
    p.log_likelihood = [params](std::span<const double> x) {
      return pyramid_log_l(x, params);
    };
    p.contour_log_volume = [params](double log_l) {
      return pyramid_contour_log_volume(log_l, params);
    };
    return p;
  }
  if (name == "eggbox") {
    p.dim = 2;
    p.log_likelihood = [](std::span<const double> x) {
      return eggbox_log_l(x);
    };
    p.true_log_z = 235.88;
    return p;
  }
  if (name.rfind("loggamma-", 0) == 0) {
    p.dim = parse_dim(name, 9);
    if (p.dim < 2 || p.dim % 2 != 0) {
      throw std::invalid_argument("unknown problem: " + name);
    }
    p.log_likelihood = [](std::span<const double> x) {
      return log_gamma_problem_log_l(x);
    };
    p.true_log_z = 0.0;
    return p;
  }
  throw std::invalid_argument("unknown problem: " + name);
}

}  // namespace nsv
