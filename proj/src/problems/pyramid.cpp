#include "nsv/problems/pyramid.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nsv/core/logspace.hpp"

namespace nsv {

double pyramid_log_l(std::span<const double> x, const PyramidParams& params) {
  assert(x.size() == params.sigmas.size());
  double r0 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    r0 = std::max(r0, std::fabs(x[i] - 0.5) / params.sigmas[i]);
  }
  if (r0 == 0.0) return 0.0;
  return -std::pow(r0, 1.0 / params.s);
}

double pyramid_contour_log_volume(double log_l, const PyramidParams& params) {
  if (log_l > 0.0) throw std::domain_error("pyramid contour: log_l > 0");
  if (log_l == 0.0) return neg_inf;
  const std::size_t d = params.sigmas.size();
  const double log_r0 = params.s * std::log(-log_l);
  double log_v = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    const double log_sigma = std::log(params.sigmas[i]);
    // Box half-width r0*sigma_i beyond 1/2 means the contour is clipped by
    // the cube and the product formula overstates the volume.
    if (log_r0 + log_sigma > std::log(0.5) + 1e-9) {
      throw std::domain_error("pyramid contour: box exceeds the unit cube");
    }
    log_v += std::numbers::ln2 + log_r0 + log_sigma;
  }
  return log_v;
}

std::vector<double> unit_sigmas(std::size_t d) {
  return std::vector<double>(d, 1.0);
}

std::vector<double> multiscale_sigmas(std::size_t d) {
  std::vector<double> sigmas(d);
  for (std::size_t i = 1; i <= d; ++i) {
    sigmas[i - 1] = std::pow(10.0, -3.0 * static_cast<double>(i) /
                                       static_cast<double>(d));
  }
  return sigmas;
}

}  // namespace nsv
