// Scalar reference kernels. Compiled with -ffp-contract=off: the AVX2
// variants use explicit mul+add, and dispatch equivalence is asserted
// bit-for-bit, so the compiler must not fuse these into FMAs either.

#include <cmath>
#include <limits>

#include "kernels_impl.hpp"

namespace nsv::kernels::scalar_impl {

double min_sq_dist(const PointBlock& block, std::size_t n, const double* q) {
  const std::size_t d = block.dim();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = block.column(j)[i] - q[j];
      acc += diff * diff;
    }
    best = std::min(best, acc);
  }
  return best;
}

double min_sup_dist(const PointBlock& block, std::size_t n, const double* q) {
  const std::size_t d = block.dim();
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      acc = std::max(acc, std::fabs(block.column(j)[i] - q[j]));
    }
    best = std::min(best, acc);
  }
  return best;
}

std::size_t count_lt_sq(const PointBlock& block, std::size_t n, const double* q,
                        double r_sq) {
  const std::size_t d = block.dim();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = block.column(j)[i] - q[j];
      acc += diff * diff;
    }
    if (acc < r_sq) ++count;
  }
  return count;
}

std::size_t count_lt_sup(const PointBlock& block, std::size_t n, const double* q,
                         double r) {
  const std::size_t d = block.dim();
  std::size_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      acc = std::max(acc, std::fabs(block.column(j)[i] - q[j]));
    }
    if (acc < r) ++count;
  }
  return count;
}

void sq_dists(const PointBlock& block, std::size_t n, const double* q, double* out) {
  const std::size_t d = block.dim();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      const double diff = block.column(j)[i] - q[j];
      acc += diff * diff;
    }
    out[i] = acc;
  }
}

void sup_dists(const PointBlock& block, std::size_t n, const double* q, double* out) {
  const std::size_t d = block.dim();
  for (std::size_t i = 0; i < n; ++i) {
    double acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      acc = std::max(acc, std::fabs(block.column(j)[i] - q[j]));
    }
    out[i] = acc;
  }
}

double masked_row_min(const double* row, const std::uint64_t* mask, std::size_t n) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    const double v = mask[i] ? row[i] : std::numeric_limits<double>::infinity();
    best = std::min(best, v);
  }
  return best;
}

}  // namespace nsv::kernels::scalar_impl
