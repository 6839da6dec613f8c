// AVX2 kernels: 4 point-lanes per vector over the column-major block.
// Per lane the arithmetic (mul then add, ascending coordinate order) matches
// the scalar reference exactly, so results are bit-identical; min/max/compare
// are order-insensitive. Deliberately no FMA.

#ifdef NSV_HAVE_AVX2

#include <immintrin.h>

#include <cmath>
#include <limits>

#include "kernels_impl.hpp"

namespace nsv::kernels::avx2_impl {

namespace {

inline double hmin(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  __m128d m = _mm_min_pd(lo, hi);
  m = _mm_min_sd(m, _mm_unpackhi_pd(m, m));
  return _mm_cvtsd_f64(m);
}

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// Squared euclidean distances of point lanes [i, i+4) to q.
inline __m256d sq_dist4(const PointBlock& block, std::size_t i, const double* q) {
  const std::size_t d = block.dim();
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t j = 0; j < d; ++j) {
    const __m256d x = _mm256_loadu_pd(block.column(j) + i);
    const __m256d diff = _mm256_sub_pd(x, _mm256_set1_pd(q[j]));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(diff, diff));
  }
  return acc;
}

inline __m256d sup_dist4(const PointBlock& block, std::size_t i, const double* q) {
  const std::size_t d = block.dim();
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t j = 0; j < d; ++j) {
    const __m256d x = _mm256_loadu_pd(block.column(j) + i);
    const __m256d diff = _mm256_sub_pd(x, _mm256_set1_pd(q[j]));
    acc = _mm256_max_pd(acc, abs_pd(diff));
  }
  return acc;
}

inline double scalar_sq_dist(const PointBlock& block, std::size_t i, const double* q) {
  const std::size_t d = block.dim();
  double acc = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    const double diff = block.column(j)[i] - q[j];
    acc += diff * diff;
  }
  return acc;
}

inline double scalar_sup_dist(const PointBlock& block, std::size_t i, const double* q) {
  const std::size_t d = block.dim();
  double acc = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    acc = std::max(acc, std::fabs(block.column(j)[i] - q[j]));
  }
  return acc;
}

}  // namespace

double min_sq_dist(const PointBlock& block, std::size_t n, const double* q) {
  const std::size_t n4 = n & ~std::size_t{3};
  __m256d vbest = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n4; i += 4) {
    vbest = _mm256_min_pd(vbest, sq_dist4(block, i, q));
  }
  double best = hmin(vbest);
  for (std::size_t i = n4; i < n; ++i) {
    best = std::min(best, scalar_sq_dist(block, i, q));
  }
  return best;
}

double min_sup_dist(const PointBlock& block, std::size_t n, const double* q) {
  const std::size_t n4 = n & ~std::size_t{3};
  __m256d vbest = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  for (std::size_t i = 0; i < n4; i += 4) {
    vbest = _mm256_min_pd(vbest, sup_dist4(block, i, q));
  }
  double best = hmin(vbest);
  for (std::size_t i = n4; i < n; ++i) {
    best = std::min(best, scalar_sup_dist(block, i, q));
  }
  return best;
}

std::size_t count_lt_sq(const PointBlock& block, std::size_t n, const double* q,
                        double r_sq) {
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d vr = _mm256_set1_pd(r_sq);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d lt = _mm256_cmp_pd(sq_dist4(block, i, q), vr, _CMP_LT_OQ);
    count += static_cast<std::size_t>(__builtin_popcount(
        static_cast<unsigned>(_mm256_movemask_pd(lt))));
  }
  for (std::size_t i = n4; i < n; ++i) {
    if (scalar_sq_dist(block, i, q) < r_sq) ++count;
  }
  return count;
}

std::size_t count_lt_sup(const PointBlock& block, std::size_t n, const double* q,
                         double r) {
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d vr = _mm256_set1_pd(r);
  std::size_t count = 0;
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d lt = _mm256_cmp_pd(sup_dist4(block, i, q), vr, _CMP_LT_OQ);
    count += static_cast<std::size_t>(__builtin_popcount(
        static_cast<unsigned>(_mm256_movemask_pd(lt))));
  }
  for (std::size_t i = n4; i < n; ++i) {
    if (scalar_sup_dist(block, i, q) < r) ++count;
  }
  return count;
}

void sq_dists(const PointBlock& block, std::size_t n, const double* q, double* out) {
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    _mm256_storeu_pd(out + i, sq_dist4(block, i, q));
  }
  for (std::size_t i = n4; i < n; ++i) out[i] = scalar_sq_dist(block, i, q);
}

void sup_dists(const PointBlock& block, std::size_t n, const double* q, double* out) {
  const std::size_t n4 = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n4; i += 4) {
    _mm256_storeu_pd(out + i, sup_dist4(block, i, q));
  }
  for (std::size_t i = n4; i < n; ++i) out[i] = scalar_sup_dist(block, i, q);
}

double masked_row_min(const double* row, const std::uint64_t* mask, std::size_t n) {
  const std::size_t n4 = n & ~std::size_t{3};
  const __m256d vinf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d vbest = vinf;
  for (std::size_t i = 0; i < n4; i += 4) {
    const __m256d values = _mm256_loadu_pd(row + i);
    const __m256d select = _mm256_castsi256_pd(
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(mask + i)));
    vbest = _mm256_min_pd(vbest, _mm256_blendv_pd(vinf, values, select));
  }
  double best = hmin(vbest);
  for (std::size_t i = n4; i < n; ++i) {
    const double v = mask[i] ? row[i] : std::numeric_limits<double>::infinity();
    best = std::min(best, v);
  }
  return best;
}

}  // namespace nsv::kernels::avx2_impl

#endif  // NSV_HAVE_AVX2
