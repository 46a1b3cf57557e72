#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "seidel/poly.hpp"

namespace seidel {

/// Dense matrix of arbitrary-precision integers, row-major.
///
/// Non-square shapes are representable so that callers can hand us bad input
/// and get a DimensionError from the algorithms instead of a crash.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  explicit IntMatrix(std::size_t n) : IntMatrix(n, n) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;

  mpz_class& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<mpz_class> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// det(xI - M), exact. Faddeev-LeVerrier recurrence over the integers: every
/// division by k in the recurrence is exact for integer input.
IntPolynomial charpoly_oracle(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant with row pivoting.
mpz_class bareiss_determinant(IntMatrix m);

}  // namespace seidel
