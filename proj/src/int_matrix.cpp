#include "seidel/int_matrix.hpp"

#include <utility>

#include "seidel/errors.hpp"

namespace seidel {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

std::string IntMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i != 0) out += ',';
    out += '[';
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j != 0) out += ',';
      out += (*this)(i, j).get_str();
    }
    out += ']';
  }
  out += ']';
  return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const mpz_class& x = a(i, l);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += x * b(l, j);
    }
  }
  return c;
}

IntPolynomial charpoly_oracle(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionError("charpoly_oracle needs a square matrix");
  const std::size_t n = m.rows();
  // c[n] = 1; M_1 = I; c[n-k] = -tr(A M_k) / k; M_{k+1} = A M_k + c[n-k] I.
  std::vector<mpz_class> c(n + 1);
  c[n] = 1;
  IntMatrix mk = IntMatrix::identity(n);
  mpz_class trace;
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix am = m * mk;
    trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    mpz_class q;
    // Exact by Newton's identities on an integer matrix.
    mpz_divexact_ui(q.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c[n - k] = -q;
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) am(i, i) += c[n - k];
    mk = std::move(am);
  }
  return IntPolynomial(std::move(c));
}

mpz_class bareiss_determinant(IntMatrix m) {
  if (!m.is_square()) throw DimensionError("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m(k, k);
  }
  mpz_class det = m(n - 1, n - 1);
  return sign < 0 ? mpz_class(-det) : det;
}

}  // namespace seidel
