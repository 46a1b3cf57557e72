#include "seidel/real_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "seidel/errors.hpp"

namespace seidel {

RealMatrix::RealMatrix(std::size_t n, std::vector<double> data) : n_(n), data_(std::move(data)) {
  if (data_.size() != n * n) throw DimensionError("RealMatrix data is not n*n");
}

RealMatrix RealMatrix::identity(std::size_t n) {
  RealMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double RealMatrix::asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) worst = std::max(worst, std::fabs((*this)(i, j) - (*this)(j, i)));
  }
  return worst;
}

double RealMatrix::frobenius_norm() const {
  long double acc = 0.0L;
  for (double v : data_) acc += static_cast<long double>(v) * v;
  return static_cast<double>(std::sqrt(acc));
}

}  // namespace seidel
