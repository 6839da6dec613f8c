#include "nsv/problems/loggamma.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nsv/core/logspace.hpp"

namespace nsv {

double log_gamma_log_pdf(double x, const LogGammaParams& params) {
  const double z = (x - params.mu) / params.sigma;
  return params.c * z - std::exp(z) - std::log(params.sigma) -
         std::lgamma(params.c);
}

double normal_log_pdf(double x, double mu, double sigma) {
  const double z = (x - mu) / sigma;
  return -0.5 * z * z - std::log(sigma) -
         0.5 * std::log(2.0 * std::numbers::pi);
}

namespace {

constexpr double kThird = 1.0 / 3.0;
constexpr double kTwoThirds = 2.0 / 3.0;
constexpr double kScale = 1.0 / 30.0;

double log_mean_of_two(double log_a, double log_b) {
  return logaddexp(log_a, log_b) - std::numbers::ln2;
}

}  // namespace

double log_gamma_problem_log_l(std::span<const double> x) {
  const std::size_t d = x.size();
  if (d < 2 || d % 2 != 0) {
    throw std::invalid_argument("loggamma problem needs even dimension >= 2");
  }
  const LogGammaParams ga{1.0, kThird, kScale};
  const LogGammaParams gb{1.0, kTwoThirds, kScale};

  double total = log_mean_of_two(log_gamma_log_pdf(x[0], ga),
                                 log_gamma_log_pdf(x[0], gb));
  total += log_mean_of_two(normal_log_pdf(x[1], kThird, kScale),
                           normal_log_pdf(x[1], kTwoThirds, kScale));
  // 1-based axis i: LogGamma for 3 <= i <= (d+2)/2, Normal above.
  const std::size_t split = (d + 2) / 2;
  for (std::size_t i = 3; i <= d; ++i) {
    if (i <= split) {
      total += log_gamma_log_pdf(x[i - 1], gb);
    } else {
      total += normal_log_pdf(x[i - 1], kTwoThirds, kScale);
    }
  }
  return total;
}

}  // namespace nsv
