#include "seidel/bounds.hpp"

#include <cmath>
#include <map>

#include "seidel/errors.hpp"
#include "seidel/kernels.hpp"

namespace seidel {

namespace {

// r = a^2 * b with b squarefree.
std::pair<long, long> split_square(long r) {
  long a = 1;
  long b = 1;
  for (long f = 2; f * f <= r; ++f) {
    int e = 0;
    while (r % f == 0) {
      r /= f;
      ++e;
    }
    for (int i = 0; i < e / 2; ++i) a *= f;
    if (e % 2 == 1) b *= f;
  }
  return {a, b * r};
}

}  // namespace

std::optional<mpq_class> LeastEigenvalueBound::exact_rational() const {
  mpz_class total = 0;
  for (const auto& [a, b] : simplified_radicals) {
    if (b != 1) return std::nullopt;
    total += a;
  }
  mpq_class v = rational_part + radical_coefficient * mpq_class(total);
  v.canonicalize();
  return v;
}

LeastEigenvalueBound least_eigenvalue_bound(const Partition& p) {
  const long n = p.order();
  const long k = static_cast<long>(p.size());
  LeastEigenvalueBound out;
  out.rational_part = mpq_class(n - k, k);
  out.rational_part.canonicalize();
  out.radical_coefficient = mpq_class(-2, k);
  out.radical_coefficient.canonicalize();

  std::map<long, long> by_radical;
  long double sum = 0.0L;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      const long r = p.part(i) * p.part(j);
      out.radicands.push_back(r);
      const auto [a, b] = split_square(r);
      by_radical[b] += a;
      sum += std::sqrt(static_cast<long double>(r));
    }
  }
  for (const auto& [b, a] : by_radical) out.simplified_radicals.emplace_back(a, b);
  out.value = static_cast<double>(static_cast<long double>(n) / k - 1.0L - 2.0L / k * sum);
  return out;
}

RealMatrix symmetrize_quotient(const IntMatrix& b, const Partition& p) {
  const std::size_t k = p.size();
  if (b.rows() != k || b.cols() != k) throw DimensionError("quotient matrix does not match the partition");
  RealMatrix out(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double scale = i == j ? 1.0 : std::sqrt(static_cast<double>(p.part(i)) / static_cast<double>(p.part(j)));
      out(i, j) = b(i, j).get_d() * scale;
    }
  }
  return out;
}

double rayleigh_quotient(const RealMatrix& m, std::span<const double> x) {
  if (x.size() != m.size()) throw DimensionError("vector length differs from matrix size");
  const double norm_sq = kernels::dot(x, x);
  if (norm_sq == 0.0) throw ZeroVectorError("Rayleigh quotient of the zero vector");
  std::vector<double> mx(x.size());
  for (std::size_t i = 0; i < m.size(); ++i) mx[i] = kernels::dot(m.row(i), x);
  return kernels::dot(x, mx) / norm_sq;
}

EigenvalueIntervals eigenvalue_intervals(const Partition& p) {
  const long n = p.order();
  const long k = static_cast<long>(p.size());
  EigenvalueIntervals out{};
  for (std::size_t i = 0; i + 1 < p.size(); ++i) out.positive.emplace_back(2 * p.part(i + 1) - 1, 2 * p.part(i) - 1);
  if (k == 1) {
    // J - I: eigenvalue n-1 once, -1 with multiplicity n-1.
    out.regime = SpectralRegime::null_graph;
    out.positive_count = n >= 2 ? 1 : 0;
    out.minus_one_multiplicity = n - 1;
    out.simple_least_below_minus_one = false;
    out.least_eigenvalue = n >= 2 ? -1 : 0;
  } else if (k == 2) {
    out.regime = SpectralRegime::bipartite;
    out.positive_count = 1;
    out.minus_one_multiplicity = n - 1;
    out.simple_least_below_minus_one = false;
    out.least_eigenvalue = -1;
  } else {
    out.regime = SpectralRegime::general;
    out.positive_count = k - 1;
    out.minus_one_multiplicity = n - k;
    out.simple_least_below_minus_one = true;
    if (k == n) out.least_eigenvalue = -(n - 1);
  }
  return out;
}

}  // namespace seidel
