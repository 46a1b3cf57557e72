#include "seidel/multipartite.hpp"

#include <span>
#include <utility>

#include "seidel/symmetric.hpp"

namespace seidel {

namespace {

// x + 1 - 2 * size
IntPolynomial shifted_linear(long size) { return IntPolynomial::x_minus(mpz_class(2 * size - 1)); }

// prod f_i + sum_i weight_i * prod_{j != i} f_j, via prefix/suffix products.
IntPolynomial cleared_residual(const std::vector<long>& sizes, const std::vector<long>& weights) {
  const std::size_t k = sizes.size();
  std::vector<IntPolynomial> prefix(k + 1, IntPolynomial::constant(1));
  std::vector<IntPolynomial> suffix(k + 1, IntPolynomial::constant(1));
  for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] * shifted_linear(sizes[i]);
  for (std::size_t i = k; i > 0; --i) suffix[i - 1] = suffix[i] * shifted_linear(sizes[i - 1]);
  IntPolynomial out = prefix[k];
  for (std::size_t i = 0; i < k; ++i) out += prefix[i] * suffix[i + 1] * mpz_class(weights[i]);
  return out;
}

std::vector<LinearFactorPower> repeated_factors(const Partition& p) {
  std::vector<LinearFactorPower> out;
  for (const auto& g : p.grouped()) {
    if (g.multiplicity > 1) out.push_back({2 * g.size - 1, static_cast<unsigned>(g.multiplicity - 1)});
  }
  return out;
}

unsigned plus_one_power(const Partition& p) { return static_cast<unsigned>(p.order() - static_cast<long>(p.size())); }

// (-1)^(i-1) 2^(i-1) for i >= 1
mpz_class signed_power_of_two(long i) {
  mpz_class r = 1;
  r <<= static_cast<mp_bitcnt_t>(i - 1);
  return (i - 1) % 2 == 0 ? r : mpz_class(-r);
}

}  // namespace

FactoredSeidelPoly FactoredSeidelPoly::assemble(unsigned plus_one_power, std::vector<LinearFactorPower> repeated,
                                                IntPolynomial residual) {
  FactoredSeidelPoly f;
  f.plus_one_power = plus_one_power;
  f.repeated = std::move(repeated);
  f.residual = std::move(residual);
  f.expanded = pow(IntPolynomial({1, 1}), plus_one_power);
  for (const auto& r : f.repeated) f.expanded *= pow(IntPolynomial::x_minus(mpz_class(r.root)), r.exponent);
  f.expanded *= f.residual;
  return f;
}

std::string FactoredSeidelPoly::to_string() const {
  std::string out;
  auto append = [&](const std::string& factor, unsigned exponent) {
    if (exponent == 0) return;
    if (!out.empty()) out += " * ";
    out += '(' + factor + ')';
    if (exponent > 1) out += '^' + std::to_string(exponent);
  };
  append("x+1", plus_one_power);
  for (const auto& r : repeated) append(IntPolynomial::x_minus(mpz_class(r.root)).to_string(), r.exponent);
  append(residual.to_string(), 1);
  return out;
}

IntMatrix quotient_matrix(const Partition& p) {
  const std::size_t k = p.size();
  IntMatrix b(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) b(i, j) = i == j ? p.part(i) - 1 : -p.part(j);
  }
  return b;
}

FactoredSeidelPoly charpoly_product(const Partition& p) {
  const std::vector<long> sizes(p.parts().begin(), p.parts().end());
  return FactoredSeidelPoly::assemble(plus_one_power(p), {}, cleared_residual(sizes, sizes));
}

FactoredSeidelPoly charpoly_grouped_product(const Partition& p) {
  std::vector<long> sizes;
  std::vector<long> weights;
  for (const auto& g : p.grouped()) {
    sizes.push_back(g.size);
    weights.push_back(g.size * g.multiplicity);
  }
  return FactoredSeidelPoly::assemble(plus_one_power(p), repeated_factors(p), cleared_residual(sizes, weights));
}

std::vector<mpz_class> residual_from_sigmas(std::span<const mpz_class> sigma) {
  const long k = static_cast<long>(sigma.size()) - 1;
  std::vector<mpz_class> c(sigma.size());
  for (long m = 0; m <= k; ++m) {
    // The formal i = 0 term contributes +C(k, m).
    mpz_class acc = binomial(k, m);
    for (long i = 1; i <= m; ++i) {
      acc += signed_power_of_two(i) * (i - 2) * binomial(k - i, m - i) * sigma[static_cast<std::size_t>(i)];
    }
    c[static_cast<std::size_t>(k - m)] = acc;
  }
  return c;
}

FactoredSeidelPoly charpoly_coefficients(const Partition& p) {
  const auto sigma = elementary_symmetric(p.parts());
  return FactoredSeidelPoly::assemble(plus_one_power(p), {}, IntPolynomial(residual_from_sigmas(sigma)));
}

FactoredSeidelPoly charpoly_grouped_coefficients(const Partition& p) {
  const auto groups = p.grouped();
  const long s = static_cast<long>(groups.size());
  std::vector<long> sizes;
  for (const auto& g : groups) sizes.push_back(g.size);

  const auto sigma = elementary_symmetric(sizes);
  // weighted[i] = sum_l r_l sigma_{l,i}
  std::vector<mpz_class> weighted(static_cast<std::size_t>(s) + 1);
  for (long l = 1; l <= s; ++l) {
    const auto sl = sigma_l(sizes, static_cast<std::size_t>(l));
    for (long i = 0; i <= s; ++i) {
      weighted[static_cast<std::size_t>(i)] += sl[static_cast<std::size_t>(i)] * groups[static_cast<std::size_t>(l - 1)].multiplicity;
    }
  }

  std::vector<mpz_class> c(static_cast<std::size_t>(s) + 1);
  for (long m = 0; m <= s; ++m) {
    mpz_class acc = binomial(s, m);
    for (long i = 1; i <= m; ++i) {
      acc += signed_power_of_two(i) * binomial(s - i, m - i) *
             (weighted[static_cast<std::size_t>(i)] - 2 * sigma[static_cast<std::size_t>(i)]);
    }
    c[static_cast<std::size_t>(s - m)] = acc;
  }
  return FactoredSeidelPoly::assemble(plus_one_power(p), repeated_factors(p), IntPolynomial(std::move(c)));
}

}  // namespace seidel
