// Compiled with -mavx2; only reached after a runtime CPU check.

#include "seidel/kernels.hpp"

#if SEIDEL_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace seidel::kernels::avx2 {

void signed_matmul(const std::int8_t* s, const std::int64_t* m, std::int64_t* out, std::size_t n) {
  const std::size_t vec_end = n & ~std::size_t{3};
  for (std::size_t i = 0; i < n; ++i) {
    std::int64_t* row = out + i * n;
    std::size_t j = 0;
    for (; j < vec_end; j += 4) {
      __m256i acc = _mm256_setzero_si256();
      for (std::size_t l = 0; l < n; ++l) {
        const std::int8_t sv = s[i * n + l];
        if (sv == 0) continue;
        const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(m + l * n + j));
        acc = sv > 0 ? _mm256_add_epi64(acc, v) : _mm256_sub_epi64(acc, v);
      }
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + j), acc);
    }
    for (; j < n; ++j) {
      std::int64_t acc = 0;
      for (std::size_t l = 0; l < n; ++l) {
        const std::int8_t sv = s[i * n + l];
        if (sv > 0) {
          acc += m[l * n + j];
        } else if (sv < 0) {
          acc -= m[l * n + j];
        }
      }
      row[j] = acc;
    }
  }
}

void rotate_rows(double* x, double* y, std::size_t len, double c, double s) {
  const __m256d vc = _mm256_set1_pd(c);
  const __m256d vs = _mm256_set1_pd(s);
  std::size_t j = 0;
  // No FMA: results stay bit-identical to the scalar reference.
  for (; j + 4 <= len; j += 4) {
    const __m256d xv = _mm256_loadu_pd(x + j);
    const __m256d yv = _mm256_loadu_pd(y + j);
    const __m256d nx = _mm256_sub_pd(_mm256_mul_pd(vc, xv), _mm256_mul_pd(vs, yv));
    const __m256d ny = _mm256_add_pd(_mm256_mul_pd(vs, xv), _mm256_mul_pd(vc, yv));
    _mm256_storeu_pd(x + j, nx);
    _mm256_storeu_pd(y + j, ny);
  }
  for (; j < len; ++j) {
    const double xj = x[j];
    const double yj = y[j];
    x[j] = c * xj - s * yj;
    y[j] = s * xj + c * yj;
  }
}

double dot(const double* a, const double* b, std::size_t len) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t j = 0;
  for (; j + 8 <= len; j += 8) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j)));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(_mm256_loadu_pd(a + j + 4), _mm256_loadu_pd(b + j + 4)));
  }
  for (; j + 4 <= len; j += 4) {
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(_mm256_loadu_pd(a + j), _mm256_loadu_pd(b + j)));
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc0);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; j < len; ++j) total += a[j] * b[j];
  return total;
}

}  // namespace seidel::kernels::avx2

#endif
