#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "seidel/graph.hpp"
#include "seidel/int_matrix.hpp"
#include "seidel/kernels.hpp"
#include "seidel/real_matrix.hpp"
#include "seidel/spectra.hpp"

using namespace seidel;
namespace k = seidel::kernels;

namespace {

std::vector<std::int8_t> random_signs(gen::Rng& r, std::size_t n) {
  std::vector<std::int8_t> s(n * n);
  for (auto& v : s) v = static_cast<std::int8_t>(r.between(-1, 1));
  return s;
}

std::vector<double> random_doubles(gen::Rng& r, std::size_t len) {
  std::vector<double> v(len);
  for (auto& x : v) x = std::ldexp(static_cast<double>(r.between(-1000000, 1000000)), -17);
  return v;
}

struct BackendGuard {
  k::Backend saved = k::active_backend();
  ~BackendGuard() { k::set_backend(saved); }
};

}  // namespace

TEST_CASE("scalar signed matmul matches a naive product") {
  gen::Rng r;
  for (std::size_t n : {1UL, 2UL, 3UL, 5UL, 8UL, 13UL}) {
    const auto s = random_signs(r, n);
    std::vector<std::int64_t> m(n * n);
    for (auto& v : m) v = r.between(-1000, 1000);
    std::vector<std::int64_t> out(n * n, 7);
    k::scalar::signed_matmul(s.data(), m.data(), out.data(), n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        std::int64_t acc = 0;
        for (std::size_t t = 0; t < n; ++t) acc += s[i * n + t] * m[t * n + j];
        CHECK(out[i * n + j] == acc);
      }
    }
  }
}

TEST_CASE("scalar rotation and dot") {
  std::vector<double> x{1, 2, 3};
  std::vector<double> y{4, 5, 6};
  k::scalar::rotate_rows(x.data(), y.data(), 3, 0.0, 1.0);
  CHECK(x == std::vector<double>{-4, -5, -6});
  CHECK(y == std::vector<double>{1, 2, 3});
  CHECK(k::scalar::dot(x.data(), y.data(), 3) == doctest::Approx(-32.0));
  CHECK(k::scalar::dot(x.data(), y.data(), 0) == 0.0);
}

#if SEIDEL_HAVE_AVX2_KERNELS
TEST_CASE("AVX2 kernels match the scalar reference") {
  if (!k::backend_supported(k::Backend::avx2)) {
    MESSAGE("AVX2 not available on this CPU; equivalence not exercised");
    return;
  }
  gen::Rng r;
  SUBCASE("signed matmul is bit-identical") {
    for (std::size_t n = 1; n <= 20; ++n) {
      const auto s = random_signs(r, n);
      std::vector<std::int64_t> m(n * n);
      for (auto& v : m) v = r.between(-(1L << 40), 1L << 40);
      std::vector<std::int64_t> a(n * n);
      std::vector<std::int64_t> b(n * n);
      k::scalar::signed_matmul(s.data(), m.data(), a.data(), n);
      k::avx2::signed_matmul(s.data(), m.data(), b.data(), n);
      CHECK(a == b);
    }
  }
  SUBCASE("rotation is bit-identical") {
    for (std::size_t len = 0; len <= 37; ++len) {
      auto x1 = random_doubles(r, len);
      auto y1 = random_doubles(r, len);
      auto x2 = x1;
      auto y2 = y1;
      const double theta = static_cast<double>(r.between(0, 6283)) / 1000.0;
      k::scalar::rotate_rows(x1.data(), y1.data(), len, std::cos(theta), std::sin(theta));
      k::avx2::rotate_rows(x2.data(), y2.data(), len, std::cos(theta), std::sin(theta));
      CHECK(x1 == x2);
      CHECK(y1 == y2);
    }
  }
  SUBCASE("dot agrees to rounding") {
    for (std::size_t len = 0; len <= 70; ++len) {
      const auto a = random_doubles(r, len);
      const auto b = random_doubles(r, len);
      double mag = 0.0;
      for (std::size_t i = 0; i < len; ++i) mag += std::fabs(a[i] * b[i]);
      CHECK(std::fabs(k::scalar::dot(a.data(), b.data(), len) - k::avx2::dot(a.data(), b.data(), len)) <=
            1e-14 * (1.0 + mag));
    }
  }
}

TEST_CASE("results do not depend on the active backend") {
  if (!k::backend_supported(k::Backend::avx2)) return;
  BackendGuard guard;
  gen::Rng r;
  for (int t = 0; t < 30; ++t) {
    const Graph g = gen::graph(r, static_cast<int>(r.between(1, 16)));
    k::set_backend(k::Backend::scalar);
    const auto a = seidel_charpoly_small(seidel_matrix(g));
    const auto ea = symmetric_eigenvalues(RealMatrix(static_cast<std::size_t>(g.order()), seidel_matrix(g).to_dense()));
    k::set_backend(k::Backend::avx2);
    const auto b = seidel_charpoly_small(seidel_matrix(g));
    const auto eb = symmetric_eigenvalues(RealMatrix(static_cast<std::size_t>(g.order()), seidel_matrix(g).to_dense()));
    CHECK(a == b);
    CHECK(ea == eb);
  }
}
#endif

TEST_CASE("dispatch bookkeeping") {
  CHECK(k::backend_supported(k::Backend::scalar));
  CHECK(std::string(k::backend_name(k::Backend::scalar)) == "scalar");
  CHECK(std::string(k::backend_name(k::Backend::avx2)) == "avx2");
  BackendGuard guard;
  k::set_backend(k::Backend::scalar);
  CHECK(k::active_backend() == k::Backend::scalar);
  std::vector<double> a{1, 2};
  std::vector<double> b{3};
  CHECK_THROWS(k::dot(a, b));
}
