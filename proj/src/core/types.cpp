#include "nsv/core/types.hpp"

#include <cassert>
#include <stdexcept>
#include <utility>

namespace nsv {

LiveSet::LiveSet(std::vector<LivePoint> points)
    : block_(points.empty() ? 0 : points.front().point.dim(), points.size()) {
  if (points.empty()) throw std::invalid_argument("empty live set");
  points_.reserve(points.size());
  log_l_.reserve(points.size());
  for (auto& lp : points) {
    assert(lp.point.dim() == block_.dim());
    block_.push_back(lp.point.coords);
    log_l_.push_back(lp.log_l);
    points_.push_back(std::move(lp.point));
  }
}

std::size_t LiveSet::argmin_log_l() const {
  std::size_t best = 0;
  for (std::size_t i = 1; i < log_l_.size(); ++i) {
    if (log_l_[i] < log_l_[best]) best = i;
  }
  return best;
}

double LiveSet::max_log_l() const {
  double best = log_l_[0];
  for (const double v : log_l_) {
    if (v > best) best = v;
  }
  return best;
}

void LiveSet::swap_points(std::size_t i, std::size_t j) {
  if (i == j) return;
  std::swap(points_[i], points_[j]);
  std::swap(log_l_[i], log_l_[j]);
  block_.swap_points(i, j);
}

void LiveSet::replace(std::size_t i, LivePoint p) {
  assert(p.point.dim() == block_.dim());
  block_.set_point(i, p.point.coords);
  log_l_[i] = p.log_l;
  points_[i] = std::move(p.point);
}

UnitPoint prior_sample(RngStream& rng, std::size_t d) {
  UnitPoint p;
  p.coords.resize(d);
  for (std::size_t j = 0; j < d; ++j) p.coords[j] = rng.uniform01();
  return p;
}

}  // namespace nsv
