#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nsv/samplers/sampler.hpp"

namespace nsv {

// Bootstrap rounds needed to push the miss probability of a live point below
// target_p, using the empirical ~37% chance of a point being left out of one
// resample: m = (ln target_p - ln N) / ln(1 - 0.37).
double bootstrap_round_count(std::size_t n_live, double target_p);

// R = max over bootstrap rounds, over the points left out of that round's
// with-replacement resample, of the distance to the nearest resampled point.
// Degenerate sets (under two points, or all coincident) give 0 with a warning.
double compute_r(const LiveSet& live, std::size_t n_active, std::size_t rounds,
                 Norm norm, RngStream& rng);
double compute_r(const LiveSet& live, std::size_t rounds, Norm norm,
                 RngStream& rng);

// Uniform draw from {x in the cube : min_dist(x, live[0..n_active), norm) < r}
// by whole-cube rejection. n_trials, when given, reports the trials spent.
UnitPoint draw_near_v1(const LiveSet& live, std::size_t n_active, double r,
                       Norm norm, RngStream& rng, std::uint64_t max_trials,
                       std::uint64_t* n_trials = nullptr);

// Same distribution, built locally: uniform point in the norm-ball of radius
// r around a random live point, thinned by 1/(number of live points whose
// balls overlap it). Out-of-cube candidates restart with a fresh mother.
UnitPoint draw_near_v2(const LiveSet& live, std::size_t n_active, double r,
                       Norm norm, RngStream& rng, std::uint64_t max_trials);

// All pairwise distances among the first size() live points, kept in step
// with the live set through swap/update notifications. Euclidean entries are
// squared. Pure memoization: entries are bit-identical to a fresh build.
class PairwiseCache {
 public:
  PairwiseCache(Norm norm, std::size_t capacity);

  void build(const LiveSet& live, std::size_t n);
  void swap_points(std::size_t i, std::size_t j);
  void update_point(std::size_t i, const LiveSet& live);

  const double* row(std::size_t i) const { return data_.data() + i * capacity_; }
  std::size_t size() const { return n_; }

 private:
  Norm norm_;
  std::size_t capacity_;
  std::size_t n_ = 0;
  std::vector<double> data_;
  std::vector<double> scratch_;
};

struct RegionState {
  double radius_r = 0.0;
  std::int64_t computed_at_iteration = -1;
  Norm norm = Norm::euclidean;
};

class RegionSampler final : public ConstrainedSampler {
 public:
  RegionSampler(const RegionSpec& spec, std::uint64_t stall_budget);

  LivePoint draw(const Problem& problem, double log_l_min, const LiveSet& live,
                 std::size_t n_active, std::size_t iteration, RngStream& rng,
                 EvalCounter& counter) override;
  void observe_swap(std::size_t i, std::size_t j) override;
  void observe_replace(std::size_t i, const LiveSet& live) override;

  const RegionState& state() const { return state_; }
  const PairwiseCache* cache() const { return cache_ ? &*cache_ : nullptr; }

 private:
  UnitPoint next_candidate(const LiveSet& live, std::size_t n_active,
                           RngStream& rng);
  void note_global_trials(std::uint64_t trials);

  RegionSpec spec_;
  std::uint64_t stall_budget_;
  RegionState state_;
  std::optional<PairwiseCache> cache_;  // built on first draw

  // Trailing-window acceptance of the global variant, for automatic mode.
  bool global_phase_;
  std::vector<std::uint8_t> window_;
  std::size_t window_pos_ = 0;
  std::size_t window_fill_ = 0;
  std::size_t window_hits_ = 0;
};

}  // namespace nsv
