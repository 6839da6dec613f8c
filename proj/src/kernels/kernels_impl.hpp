#pragma once

// Per-backend kernel entry points. Internal to src/kernels.

#include <cstddef>
#include <cstdint>

#include "nsv/kernels/point_block.hpp"

namespace nsv::kernels::scalar_impl {

double min_sq_dist(const PointBlock& block, std::size_t n, const double* q);
double min_sup_dist(const PointBlock& block, std::size_t n, const double* q);
std::size_t count_lt_sq(const PointBlock& block, std::size_t n, const double* q,
                        double r_sq);
std::size_t count_lt_sup(const PointBlock& block, std::size_t n, const double* q,
                         double r);
void sq_dists(const PointBlock& block, std::size_t n, const double* q, double* out);
void sup_dists(const PointBlock& block, std::size_t n, const double* q, double* out);
double masked_row_min(const double* row, const std::uint64_t* mask, std::size_t n);

}  // namespace nsv::kernels::scalar_impl

#ifdef NSV_HAVE_AVX2
namespace nsv::kernels::avx2_impl {

double min_sq_dist(const PointBlock& block, std::size_t n, const double* q);
double min_sup_dist(const PointBlock& block, std::size_t n, const double* q);
std::size_t count_lt_sq(const PointBlock& block, std::size_t n, const double* q,
                        double r_sq);
std::size_t count_lt_sup(const PointBlock& block, std::size_t n, const double* q,
                         double r);
void sq_dists(const PointBlock& block, std::size_t n, const double* q, double* out);
void sup_dists(const PointBlock& block, std::size_t n, const double* q, double* out);
double masked_row_min(const double* row, const std::uint64_t* mask, std::size_t n);

}  // namespace nsv::kernels::avx2_impl
#endif
