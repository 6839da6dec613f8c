#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nsv::kernels {

// Fixed-capacity point storage, column-major: coordinate j of every point is
// contiguous (stride = capacity). SIMD lanes map to points, so a kernel's
// per-point arithmetic runs in the same order as the scalar reference loop.
class PointBlock {
 public:
  PointBlock() = default;
  PointBlock(std::size_t dim, std::size_t capacity)
      : dim_(dim), capacity_(capacity), data_(dim * capacity, 0.0) {}

  std::size_t dim() const { return dim_; }
  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return size_; }

  void clear() { size_ = 0; }
  void push_back(std::span<const double> p);
  void set_point(std::size_t i, std::span<const double> p);
  void swap_points(std::size_t i, std::size_t j);

  const double* column(std::size_t j) const { return data_.data() + j * capacity_; }
  double at(std::size_t i, std::size_t j) const { return column(j)[i]; }
  void copy_point(std::size_t i, std::span<double> out) const;

 private:
  double* column_mut(std::size_t j) { return data_.data() + j * capacity_; }

  std::size_t dim_ = 0;
  std::size_t capacity_ = 0;
  std::size_t size_ = 0;
  std::vector<double> data_;
};

}  // namespace nsv::kernels
