#include "nsv/kernels/point_block.hpp"

#include <cassert>
#include <utility>

namespace nsv::kernels {

void PointBlock::push_back(std::span<const double> p) {
  assert(p.size() == dim_);
  assert(size_ < capacity_);
  const std::size_t i = size_++;
  for (std::size_t j = 0; j < dim_; ++j) column_mut(j)[i] = p[j];
}

void PointBlock::set_point(std::size_t i, std::span<const double> p) {
  assert(p.size() == dim_);
  assert(i < size_);
  for (std::size_t j = 0; j < dim_; ++j) column_mut(j)[i] = p[j];
}

void PointBlock::swap_points(std::size_t i, std::size_t j) {
  assert(i < size_ && j < size_);
  if (i == j) return;
  for (std::size_t c = 0; c < dim_; ++c) {
    double* col = column_mut(c);
    std::swap(col[i], col[j]);
  }
}

void PointBlock::copy_point(std::size_t i, std::span<double> out) const {
  assert(out.size() == dim_);
  assert(i < size_);
  for (std::size_t j = 0; j < dim_; ++j) out[j] = at(i, j);
}

}  // namespace nsv::kernels
