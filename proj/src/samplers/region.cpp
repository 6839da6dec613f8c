#include "nsv/samplers/region.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

#include "nsv/core/errors.hpp"
#include "nsv/core/log.hpp"
#include "nsv/kernels/distance_kernels.hpp"

namespace nsv {

double bootstrap_round_count(std::size_t n_live, double target_p) {
  const double p1 = 0.37;
  return (std::log(target_p) - std::log(static_cast<double>(n_live))) /
         std::log1p(-p1);
}

namespace {

// Max over rounds, over left-out points, of the min distance to the chosen
// resample. Works on whatever metric the cache stores (squared for
// euclidean), which is monotone, so the max commutes with the sqrt applied
// by the callers.
double bootstrap_radius(const PairwiseCache& cache, std::size_t n_active,
                        std::size_t rounds, RngStream& rng) {
  std::vector<std::uint64_t> chosen(n_active);
  double best = 0.0;
  for (std::size_t round = 0; round < rounds; ++round) {
    std::fill(chosen.begin(), chosen.end(), 0);
    for (std::size_t k = 0; k < n_active; ++k) {
      chosen[rng.uniform_below(n_active)] = ~std::uint64_t{0};
    }
    for (std::size_t i = 0; i < n_active; ++i) {
      if (chosen[i]) continue;
      const double d = kernels::masked_row_min(cache.row(i), chosen.data(),
                                               n_active);
      best = std::max(best, d);
    }
  }
  return best;
}

double finish_radius(double raw, Norm norm) {
  const double r = norm == Norm::euclidean ? std::sqrt(raw) : raw;
  if (r == 0.0) {
    log_info("warning: compute_r: degenerate live set, R = 0");
  }
  return r;
}

}  // namespace

double compute_r(const LiveSet& live, std::size_t n_active, std::size_t rounds,
                 Norm norm, RngStream& rng) {
  if (n_active < 2) {
    log_info("warning: compute_r: fewer than two live points, R = 0");
    return 0.0;
  }
  PairwiseCache cache(norm, n_active);
  cache.build(live, n_active);
  return finish_radius(bootstrap_radius(cache, n_active, rounds, rng), norm);
}

double compute_r(const LiveSet& live, std::size_t rounds, Norm norm,
                 RngStream& rng) {
  return compute_r(live, live.size(), rounds, norm, rng);
}

UnitPoint draw_near_v1(const LiveSet& live, std::size_t n_active, double r,
                       Norm norm, RngStream& rng, std::uint64_t max_trials,
                       std::uint64_t* n_trials) {
  assert(r > 0.0 && n_active >= 1);
  const double r_sq = r * r;
  for (std::uint64_t trial = 1; trial <= max_trials; ++trial) {
    UnitPoint candidate = prior_sample(rng, live.dim());
    const double* q = candidate.coords.data();
    const bool near =
        norm == Norm::euclidean
            ? kernels::min_sq_dist(live.block(), n_active, q) < r_sq
            : kernels::min_sup_dist(live.block(), n_active, q) < r;
    if (near) {
      if (n_trials) *n_trials = trial;
      return candidate;
    }
  }
  throw SamplerStalledError("draw_near global rejection exceeded its budget");
}

UnitPoint draw_near_v2(const LiveSet& live, std::size_t n_active, double r,
                       Norm norm, RngStream& rng, std::uint64_t max_trials) {
  assert(r > 0.0 && n_active >= 1);
  const std::size_t d = live.dim();
  const double r_sq = r * r;
  UnitPoint candidate;
  candidate.coords.resize(d);
  std::vector<double> direction(d);
  for (std::uint64_t trial = 1; trial <= max_trials; ++trial) {
    const UnitPoint& mother = live.point(rng.uniform_below(n_active));
    if (norm == Norm::euclidean) {
      double norm_sq = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        direction[j] = rng.normal();
        norm_sq += direction[j] * direction[j];
      }
      if (norm_sq == 0.0) continue;
      const double radius =
          r * std::pow(rng.uniform01(), 1.0 / static_cast<double>(d));
      const double scale = radius / std::sqrt(norm_sq);
      for (std::size_t j = 0; j < d; ++j) {
        candidate.coords[j] = mother.coords[j] + scale * direction[j];
      }
    } else {
      for (std::size_t j = 0; j < d; ++j) {
        candidate.coords[j] =
            mother.coords[j] + (2.0 * rng.uniform01() - 1.0) * r;
      }
    }
    if (!candidate.in_unit_cube()) continue;  // restart with a fresh mother

    const double* q = candidate.coords.data();
    const std::size_t m =
        norm == Norm::euclidean
            ? kernels::count_lt_sq(live.block(), n_active, q, r_sq)
            : kernels::count_lt_sup(live.block(), n_active, q, r);
    if (m == 0) continue;  // boundary rounding; the mother should be within r
    if (rng.uniform01() < 1.0 / static_cast<double>(m)) return candidate;
  }
  throw SamplerStalledError("draw_near neighbourhood sampling exceeded its budget");
}

PairwiseCache::PairwiseCache(Norm norm, std::size_t capacity)
    : norm_(norm), capacity_(capacity), data_(capacity * capacity) {}

void PairwiseCache::build(const LiveSet& live, std::size_t n) {
  assert(n <= capacity_);
  n_ = n;
  for (std::size_t i = 0; i < n_; ++i) {
    const double* q = live.point(i).coords.data();
    double* out = data_.data() + i * capacity_;
    if (norm_ == Norm::euclidean) {
      kernels::sq_dists(live.block(), n_, q, out);
    } else {
      kernels::sup_dists(live.block(), n_, q, out);
    }
  }
}

void PairwiseCache::swap_points(std::size_t i, std::size_t j) {
  if (i == j) return;
  double* ri = data_.data() + i * capacity_;
  double* rj = data_.data() + j * capacity_;
  std::swap_ranges(ri, ri + n_, rj);
  for (std::size_t k = 0; k < n_; ++k) {
    std::swap(data_[k * capacity_ + i], data_[k * capacity_ + j]);
  }
}

void PairwiseCache::update_point(std::size_t i, const LiveSet& live) {
  const double* q = live.point(i).coords.data();
  double* row_i = data_.data() + i * capacity_;
  if (norm_ == Norm::euclidean) {
    kernels::sq_dists(live.block(), n_, q, row_i);
  } else {
    kernels::sup_dists(live.block(), n_, q, row_i);
  }
  // (a-b)^2 and |a-b| are symmetric, so mirroring the row is exact.
  for (std::size_t k = 0; k < n_; ++k) {
    data_[k * capacity_ + i] = row_i[k];
  }
}

RegionSampler::RegionSampler(const RegionSpec& spec, std::uint64_t stall_budget)
    : spec_(spec),
      stall_budget_(stall_budget),
      global_phase_(spec.draw_variant != DrawVariant::near_point),
      window_(100, 0) {
  state_.norm = spec_.norm;
}

void RegionSampler::note_global_trials(std::uint64_t trials) {
  if (spec_.draw_variant != DrawVariant::automatic) return;
  // One accepted candidate preceded by trials-1 misses; feeding more misses
  // than the window holds is pointless.
  const std::uint64_t misses =
      std::min<std::uint64_t>(trials - 1, window_.size());
  for (std::uint64_t k = 0; k <= misses; ++k) {
    const std::uint8_t hit = k == misses ? 1 : 0;
    if (window_fill_ == window_.size()) {
      window_hits_ -= window_[window_pos_];
    } else {
      ++window_fill_;
    }
    window_[window_pos_] = hit;
    window_hits_ += hit;
    window_pos_ = (window_pos_ + 1) % window_.size();
  }
  if (window_fill_ == window_.size() &&
      window_hits_ * 20 <= window_.size()) {  // acceptance dropped to <= 5%
    global_phase_ = false;
  }
}

UnitPoint RegionSampler::next_candidate(const LiveSet& live,
                                        std::size_t n_active, RngStream& rng) {
  if (global_phase_) {
    std::uint64_t trials = 0;
    UnitPoint p = draw_near_v1(live, n_active, state_.radius_r, spec_.norm,
                               rng, stall_budget_, &trials);
    note_global_trials(trials);
    return p;
  }
  return draw_near_v2(live, n_active, state_.radius_r, spec_.norm, rng,
                      stall_budget_);
}

LivePoint RegionSampler::draw(const Problem& problem, double log_l_min,
                              const LiveSet& live, std::size_t n_active,
                              std::size_t iteration, RngStream& rng,
                              EvalCounter& counter) {
  if (!cache_) {
    cache_.emplace(spec_.norm, live.size());
    cache_->build(live, live.size());
  }
  const auto it = static_cast<std::int64_t>(iteration);
  if (state_.computed_at_iteration < 0 ||
      it - state_.computed_at_iteration >=
          static_cast<std::int64_t>(spec_.update_interval)) {
    state_.radius_r = finish_radius(
        bootstrap_radius(*cache_, n_active, spec_.bootstrap_rounds, rng),
        spec_.norm);
    state_.computed_at_iteration = it;
  }
  if (state_.radius_r <= 0.0) {
    throw SamplerStalledError("region radius collapsed to zero");
  }
  for (std::uint64_t spent = 0; spent < stall_budget_; ++spent) {
    UnitPoint candidate = next_candidate(live, n_active, rng);
    const double log_l = eval_log_l(problem, candidate.coords, counter);
    if (log_l > log_l_min) return {std::move(candidate), log_l};
  }
  throw SamplerStalledError("region sampler exceeded the evaluation budget");
}

void RegionSampler::observe_swap(std::size_t i, std::size_t j) {
  if (cache_) cache_->swap_points(i, j);
}

void RegionSampler::observe_replace(std::size_t i, const LiveSet& live) {
  if (cache_) cache_->update_point(i, live);
}

}  // namespace nsv
