#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nsv {

struct PyramidParams {
  double s = 100.0;            // slope exponent, > 0
  std::vector<double> sigmas;  // per-axis scales, all > 0
};

// log L(x) = -(sup_i |x_i - 1/2| / sigma_i)^(1/s). Maximum 0 at the centre.
double pyramid_log_l(std::span<const double> x, const PyramidParams& params);

// Log prior volume enclosed by the contour at log_l: the contours are
// axis-aligned boxes of half-width r0*sigma_i with r0 = (-log_l)^s.
// Throws std::domain_error for log_l > 0 and for contours whose box would
// spill outside the unit cube (the closed form stops being the volume there).
double pyramid_contour_log_volume(double log_l, const PyramidParams& params);

std::vector<double> unit_sigmas(std::size_t d);
// sigma_i = 10^(-3i/d), i = 1..d: three decades of scale separation.
std::vector<double> multiscale_sigmas(std::size_t d);

}  // namespace nsv
