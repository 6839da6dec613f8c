#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "nsv/kernels/point_block.hpp"

namespace nsv::kernels {

// Distance kernels come in a scalar reference implementation and an AVX2
// variant selected at runtime. Both order per-point arithmetic identically
// and avoid FMA contraction, so results are bit-identical; the equivalence
// tests assert exact equality. NV_KERNEL={auto|scalar|avx2} overrides the
// CPU-feature autodetection; force_backend is the test hook.
enum class Backend { scalar, avx2 };

Backend active_backend();
bool backend_available(Backend backend);
std::string_view backend_name(Backend backend);
void force_backend(std::optional<Backend> backend);

// All kernels read the first n points of the block against a query point q
// of block.dim() coordinates. Euclidean variants work with squared
// distances; "lt" counts are strict.
double min_sq_dist(const PointBlock& block, std::size_t n, const double* q);
double min_sup_dist(const PointBlock& block, std::size_t n, const double* q);
std::size_t count_lt_sq(const PointBlock& block, std::size_t n, const double* q,
                        double r_sq);
std::size_t count_lt_sup(const PointBlock& block, std::size_t n, const double* q,
                         double r);
void sq_dists(const PointBlock& block, std::size_t n, const double* q, double* out);
void sup_dists(const PointBlock& block, std::size_t n, const double* q, double* out);

// Min over row[i] for the i with mask[i] != 0; mask words are 0 or ~0 so the
// AVX2 path can blend on the sign bit. Returns +inf if nothing is selected.
double masked_row_min(const double* row, const std::uint64_t* mask, std::size_t n);

}  // namespace nsv::kernels
