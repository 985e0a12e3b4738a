#pragma once

#include <cassert>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace dicut {

/// Dense l x l matrix. Element accessors take 1-based class indices.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int side) : side_(side), data_(static_cast<std::size_t>(side) * side, 0.0) {}

  int side() const noexcept { return side_; }

  double& at(int i, int j) noexcept { return data_[offset(i, j)]; }
  double at(int i, int j) const noexcept { return data_[offset(i, j)]; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  double sum() const noexcept { return std::accumulate(data_.begin(), data_.end(), 0.0); }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t offset(int i, int j) const noexcept {
    assert(i >= 1 && i <= side_ && j >= 1 && j <= side_);
    return static_cast<std::size_t>(i - 1) * side_ + static_cast<std::size_t>(j - 1);
  }

  int side_ = 0;
  std::vector<double> data_;
};

/// Dense k x k x l x l array indexed (a, b, i, j): two degree classes then two
/// bias classes. Accessors take 1-based indices; storage is row-major with j
/// fastest.
class Array4 {
 public:
  Array4() = default;
  Array4(int k, int l) : k_(k), l_(l), data_(static_cast<std::size_t>(k) * k * l * l, 0.0) {}

  int k() const noexcept { return k_; }
  int l() const noexcept { return l_; }
  std::size_t size() const noexcept { return data_.size(); }

  double& at(int a, int b, int i, int j) noexcept { return data_[offset(a, b, i, j)]; }
  double at(int a, int b, int i, int j) const noexcept { return data_[offset(a, b, i, j)]; }

  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  double sum() const noexcept { return std::accumulate(data_.begin(), data_.end(), 0.0); }

  bool same_shape(const Array4& o) const noexcept { return k_ == o.k_ && l_ == o.l_; }
  bool operator==(const Array4&) const = default;

  std::size_t offset(int a, int b, int i, int j) const noexcept {
    assert(a >= 1 && a <= k_ && b >= 1 && b <= k_ && i >= 1 && i <= l_ && j >= 1 && j <= l_);
    const std::size_t kk = static_cast<std::size_t>(k_);
    const std::size_t ll = static_cast<std::size_t>(l_);
    return ((static_cast<std::size_t>(a - 1) * kk + static_cast<std::size_t>(b - 1)) * ll +
            static_cast<std::size_t>(i - 1)) * ll + static_cast<std::size_t>(j - 1);
  }

 private:
  int k_ = 0;
  int l_ = 0;
  std::vector<double> data_;
};

/// Entrywise 1-norm of the difference. Shapes must agree.
double l1_distance(std::span<const double> x, std::span<const double> y);
double max_abs_difference(std::span<const double> x, std::span<const double> y);

}  // namespace dicut
