#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#include "seidel/kernels.hpp"

namespace seidel::kernels {

namespace {

struct Table {
  Backend backend;
  void (*signed_matmul)(const std::int8_t*, const std::int64_t*, std::int64_t*, std::size_t);
  void (*rotate_rows)(double*, double*, std::size_t, double, double);
  double (*dot)(const double*, const double*, std::size_t);
};

constexpr Table kScalar{Backend::scalar, &scalar::signed_matmul, &scalar::rotate_rows, &scalar::dot};
#if SEIDEL_HAVE_AVX2_KERNELS
constexpr Table kAvx2{Backend::avx2, &avx2::signed_matmul, &avx2::rotate_rows, &avx2::dot};
#endif

const Table* table_for(Backend b) {
#if SEIDEL_HAVE_AVX2_KERNELS
  if (b == Backend::avx2) return &kAvx2;
#endif
  return &kScalar;
}

const Table* initial_table() {
  if (const char* env = std::getenv("SEIDEL_KERNELS")) {
    const std::string_view v(env);
    if (v == "scalar") return &kScalar;
    if (v == "avx2" && backend_supported(Backend::avx2)) return table_for(Backend::avx2);
  }
  return backend_supported(Backend::avx2) ? table_for(Backend::avx2) : &kScalar;
}

std::atomic<const Table*>& current() {
  static std::atomic<const Table*> t{initial_table()};
  return t;
}

}  // namespace

const char* backend_name(Backend b) { return b == Backend::avx2 ? "avx2" : "scalar"; }

bool backend_supported(Backend b) {
  if (b == Backend::scalar) return true;
#if SEIDEL_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

Backend active_backend() { return current().load(std::memory_order_relaxed)->backend; }

void set_backend(Backend b) {
  if (!backend_supported(b)) throw std::runtime_error(std::string("kernel backend unsupported: ") + backend_name(b));
  current().store(table_for(b), std::memory_order_relaxed);
}

void signed_matmul(std::span<const std::int8_t> s, std::span<const std::int64_t> m, std::span<std::int64_t> out,
                   std::size_t n) {
  if (s.size() < n * n || m.size() < n * n || out.size() < n * n) {
    throw std::invalid_argument("signed_matmul: buffer smaller than n*n");
  }
  current().load(std::memory_order_relaxed)->signed_matmul(s.data(), m.data(), out.data(), n);
}

void rotate_rows(std::span<double> x, std::span<double> y, double c, double s) {
  if (x.size() != y.size()) throw std::invalid_argument("rotate_rows: length mismatch");
  current().load(std::memory_order_relaxed)->rotate_rows(x.data(), y.data(), x.size(), c, s);
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  return current().load(std::memory_order_relaxed)->dot(a.data(), b.data(), a.size());
}

}  // namespace seidel::kernels
