#pragma once

// Data-parallel inner loops. Every kernel has a portable scalar reference in
// seidel::kernels::scalar and, on x86-64, an AVX2 variant in
// seidel::kernels::avx2. The dispatching entry points in seidel::kernels pick
// the best variant supported by the running CPU; the SEIDEL_KERNELS
// environment variable ("scalar" or "avx2") overrides the choice.

#include <cstddef>
#include <cstdint>
#include <span>

namespace seidel::kernels {

enum class Backend { scalar, avx2 };

const char* backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
/// Not synchronized: switch backends before starting worker threads.
void set_backend(Backend b);

/// out = S * M for n x n row-major matrices, where S has entries in
/// {-1, 0, +1}. Exact as long as the result fits in int64.
void signed_matmul(std::span<const std::int8_t> s, std::span<const std::int64_t> m,
                   std::span<std::int64_t> out, std::size_t n);

/// Plane rotation of two equal-length rows:
///   x <- c*x - s*y,  y <- s*x + c*y
void rotate_rows(std::span<double> x, std::span<double> y, double c, double s);

double dot(std::span<const double> a, std::span<const double> b);

namespace scalar {
void signed_matmul(const std::int8_t* s, const std::int64_t* m, std::int64_t* out, std::size_t n);
void rotate_rows(double* x, double* y, std::size_t len, double c, double s);
double dot(const double* a, const double* b, std::size_t len);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define SEIDEL_HAVE_AVX2_KERNELS 1
namespace avx2 {
void signed_matmul(const std::int8_t* s, const std::int64_t* m, std::int64_t* out, std::size_t n);
void rotate_rows(double* x, double* y, std::size_t len, double c, double s);
double dot(const double* a, const double* b, std::size_t len);
}  // namespace avx2
#else
#define SEIDEL_HAVE_AVX2_KERNELS 0
#endif

}  // namespace seidel::kernels
