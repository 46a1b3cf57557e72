#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "seidel/int_matrix.hpp"
#include "seidel/partition.hpp"
#include "seidel/poly.hpp"

namespace seidel {

/// (x - root)^exponent
struct LinearFactorPower {
  long root;
  unsigned exponent;
  friend bool operator==(const LinearFactorPower&, const LinearFactorPower&) = default;
};

/// Seidel characteristic polynomial of K_{n_1..n_k} kept in factored form:
///
///   (x+1)^plus_one_power * prod (x - root)^exponent * residual == expanded
///
/// For the flat closed forms `repeated` is empty and the residual has degree
/// k; for the grouped forms it carries (x+1-2n_i)^(r_i-1) and the residual
/// has degree s, the number of distinct part sizes.
struct FactoredSeidelPoly {
  unsigned plus_one_power = 0;
  std::vector<LinearFactorPower> repeated;
  IntPolynomial residual;
  IntPolynomial expanded;

  static FactoredSeidelPoly assemble(unsigned plus_one_power, std::vector<LinearFactorPower> repeated,
                                     IntPolynomial residual);
  /// "(x+1)^3 * (x^3-3x^2-9x+19)"
  std::string to_string() const;
};

/// Quotient matrix of S(K_P) for the partition into parts:
/// B_ii = n_i - 1, B_ij = -n_j.
IntMatrix quotient_matrix(const Partition& p);

/// Cleared-denominator product form:
///   (x+1)^(n-k) * [ prod (x+1-2n_i) + sum_i n_i prod_{j!=i} (x+1-2n_j) ].
FactoredSeidelPoly charpoly_product(const Partition& p);

/// Product form over distinct sizes with the repeated factors pulled out:
///   (x+1)^(n-k) prod (x+1-2n_i)^(r_i-1)
///     * [ prod (x+1-2n_i) + sum_i r_i n_i prod_{j!=i} (x+1-2n_j) ].
FactoredSeidelPoly charpoly_grouped_product(const Partition& p);

/// Residual coefficients from the elementary symmetric functions of the
/// parts. The coefficient of x^(k-m) is
///   C(k,m) + sum_{i=1..m} (-1)^(i-1) 2^(i-1) (i-2) C(k-i,m-i) sigma_i.
FactoredSeidelPoly charpoly_coefficients(const Partition& p);

/// Grouped counterpart: over the s distinct sizes with multiplicities r_l,
/// the coefficient of x^(s-m) is
///   C(s,m) + sum_{i=1..m} (-1)^(i-1) 2^(i-1) C(s-i,m-i)
///                         (sum_l r_l sigma_{l,i} - 2 sigma_i).
FactoredSeidelPoly charpoly_grouped_coefficients(const Partition& p);

/// Residual coefficient vector (constant first) of charpoly_coefficients,
/// computed straight from sigma_1..sigma_k. sigma[0] must be 1.
std::vector<mpz_class> residual_from_sigmas(std::span<const mpz_class> sigma);

}  // namespace seidel
