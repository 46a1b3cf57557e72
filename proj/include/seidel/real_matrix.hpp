#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace seidel {

/// Dense square matrix of doubles, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  explicit RealMatrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  RealMatrix(std::size_t n, std::vector<double> data);

  static RealMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * n_, n_}; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * n_, n_}; }
  std::span<const double> data() const { return data_; }

  /// max |M_ij - M_ji|
  double asymmetry() const;
  double frobenius_norm() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

}  // namespace seidel
