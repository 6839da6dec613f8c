#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "nsv/core/rng.hpp"
#include "nsv/kernels/point_block.hpp"

namespace nsv {

// A point in unit-hypercube coordinates. Sampled points always lie in
// [0,1]^d; the struct itself does not clamp, so distance helpers remain
// usable on arbitrary coordinates.
struct UnitPoint {
  std::vector<double> coords;

  std::size_t dim() const { return coords.size(); }
  bool in_unit_cube() const {
    for (const double c : coords) {
      if (!(c >= 0.0 && c <= 1.0)) return false;
    }
    return true;
  }
};

// A point together with its natural-log likelihood (finite or -inf).
struct LivePoint {
  UnitPoint point;
  double log_l = 0.0;
};

// The current set of N live points. Coordinates are mirrored into a
// column-major block so the distance kernels can scan them; the worst point
// is swapped to the back before replacement, letting callers address the
// surviving prefix.
class LiveSet {
 public:
  explicit LiveSet(std::vector<LivePoint> points);

  std::size_t size() const { return log_l_.size(); }
  std::size_t dim() const { return block_.dim(); }

  const UnitPoint& point(std::size_t i) const { return points_[i]; }
  double log_l(std::size_t i) const { return log_l_[i]; }
  LivePoint live_point(std::size_t i) const { return {points_[i], log_l_[i]}; }
  const std::vector<double>& log_ls() const { return log_l_; }
  const kernels::PointBlock& block() const { return block_; }

  // Lowest log_l; ties resolve to the lowest index.
  std::size_t argmin_log_l() const;
  double max_log_l() const;

  void swap_points(std::size_t i, std::size_t j);
  void replace(std::size_t i, LivePoint p);

 private:
  std::vector<UnitPoint> points_;
  std::vector<double> log_l_;
  kernels::PointBlock block_;
};

// Each coordinate independently uniform in [0,1).
UnitPoint prior_sample(RngStream& rng, std::size_t d);

}  // namespace nsv
