#include "seidel/kernels.hpp"

namespace seidel::kernels::scalar {

void signed_matmul(const std::int8_t* s, const std::int64_t* m, std::int64_t* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t* row = out + i * n;
    for (std::size_t j = 0; j < n; ++j) row[j] = 0;
    for (std::size_t l = 0; l < n; ++l) {
      const std::int8_t sv = s[i * n + l];
      if (sv == 0) continue;
      const std::int64_t* src = m + l * n;
      if (sv > 0) {
        for (std::size_t j = 0; j < n; ++j) row[j] += src[j];
      } else {
        for (std::size_t j = 0; j < n; ++j) row[j] -= src[j];
      }
    }
  }
}

void rotate_rows(double* x, double* y, std::size_t len, double c, double s) {
  for (std::size_t j = 0; j < len; ++j) {
    const double xj = x[j];
    const double yj = y[j];
    x[j] = c * xj - s * yj;
    y[j] = s * xj + c * yj;
  }
}

double dot(const double* a, const double* b, std::size_t len) {
  double acc = 0.0;
  for (std::size_t j = 0; j < len; ++j) acc += a[j] * b[j];
  return acc;
}

}  // namespace seidel::kernels::scalar
