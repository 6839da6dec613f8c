#pragma once

#include <cstddef>
#include <span>

namespace nsv {

struct LogGammaParams {
  double c = 1.0;  // shape, > 0
  double mu = 0.0;
  double sigma = 1.0;  // scale, > 0
};

// Shape-location-scale LogGamma density, log form:
// with z = (x - mu)/sigma, log pdf = c*z - e^z - log(sigma) - log(Gamma(c)).
double log_gamma_log_pdf(double x, const LogGammaParams& params);

double normal_log_pdf(double x, double mu, double sigma);

// Mixture benchmark: x1 carries a two-component LogGamma mixture, x2 a
// two-component Normal mixture, and the remaining axes split evenly between
// single LogGamma and Normal factors. Even d >= 2 only. Normalized over the
// real line, so the unit-cube evidence is ln Z = 0 up to tail truncation.
double log_gamma_problem_log_l(std::span<const double> x);

}  // namespace nsv
