#include "nsv/kernels/distance_kernels.hpp"

#include <cstdlib>
#include <string>

#include "kernels_impl.hpp"
#include "nsv/core/log.hpp"

namespace nsv::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(NSV_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2") != 0;
#else
  return false;
#endif
}

Backend detect_backend() {
  const char* env = std::getenv("NV_KERNEL");
  if (env != nullptr) {
    const std::string v(env);
    if (v == "scalar") return Backend::scalar;
    if (v == "avx2") {
      if (cpu_has_avx2()) return Backend::avx2;
      log_error("NV_KERNEL=avx2 requested but AVX2 is unavailable, using scalar");
      return Backend::scalar;
    }
    if (v != "auto") {
      log_error("unrecognized NV_KERNEL value '" + v + "', using auto");
    }
  }
  return cpu_has_avx2() ? Backend::avx2 : Backend::scalar;
}

// force_backend is a test hook; not intended to be flipped while runs are in
// flight on other threads.
Backend g_forced = Backend::scalar;
bool g_has_forced = false;

Backend current() {
  static const Backend detected = detect_backend();
  return g_has_forced ? g_forced : detected;
}

}  // namespace

Backend active_backend() { return current(); }

bool backend_available(Backend backend) {
  return backend == Backend::scalar || cpu_has_avx2();
}

std::string_view backend_name(Backend backend) {
  return backend == Backend::avx2 ? "avx2" : "scalar";
}

void force_backend(std::optional<Backend> backend) {
  g_has_forced = backend.has_value();
  if (backend) g_forced = *backend;
}

#ifdef NSV_HAVE_AVX2
#define NSV_DISPATCH(fn, ...)                                    \
  (current() == Backend::avx2 ? avx2_impl::fn(__VA_ARGS__)       \
                              : scalar_impl::fn(__VA_ARGS__))
#else
#define NSV_DISPATCH(fn, ...) scalar_impl::fn(__VA_ARGS__)
#endif

double min_sq_dist(const PointBlock& block, std::size_t n, const double* q) {
  return NSV_DISPATCH(min_sq_dist, block, n, q);
}

double min_sup_dist(const PointBlock& block, std::size_t n, const double* q) {
  return NSV_DISPATCH(min_sup_dist, block, n, q);
}

std::size_t count_lt_sq(const PointBlock& block, std::size_t n, const double* q,
                        double r_sq) {
  return NSV_DISPATCH(count_lt_sq, block, n, q, r_sq);
}

std::size_t count_lt_sup(const PointBlock& block, std::size_t n, const double* q,
                         double r) {
  return NSV_DISPATCH(count_lt_sup, block, n, q, r);
}

void sq_dists(const PointBlock& block, std::size_t n, const double* q, double* out) {
  NSV_DISPATCH(sq_dists, block, n, q, out);
}

void sup_dists(const PointBlock& block, std::size_t n, const double* q, double* out) {
  NSV_DISPATCH(sup_dists, block, n, q, out);
}

double masked_row_min(const double* row, const std::uint64_t* mask, std::size_t n) {
  return NSV_DISPATCH(masked_row_min, row, mask, n);
}

#undef NSV_DISPATCH

}  // namespace nsv::kernels
