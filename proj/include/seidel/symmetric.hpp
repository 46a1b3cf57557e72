#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "seidel/poly.hpp"

namespace seidel {

/// e_0..e_k of the given values, read off from prod_j (1 + v_j t).
std::vector<mpz_class> elementary_symmetric(std::span<const long> values);

/// The restricted sums used by the grouped coefficient formula: entry i is
/// the sum of the i-fold products that contain values[l-1] (l is 1-based).
/// Entry 0 is 0 and entry 1 is values[l-1]. Throws IndexError if l is out of
/// range.
std::vector<mpz_class> sigma_l(std::span<const long> values, std::size_t l);

/// Integer roots of a monic polynomial with multiplicity, ascending.
/// Returns nullopt when the polynomial does not split into integer linear
/// factors. Throws NonMonicError for non-monic (or zero) input.
std::optional<std::vector<mpz_class>> integer_root_multiset(const IntPolynomial& p);

/// prod (x - r) over the multiset.
IntPolynomial from_roots(std::span<const mpz_class> roots);

/// n choose k as a big integer (0 when k < 0 or k > n).
mpz_class binomial(long n, long k);

}  // namespace seidel
