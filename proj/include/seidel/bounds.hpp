#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "seidel/int_matrix.hpp"
#include "seidel/partition.hpp"
#include "seidel/real_matrix.hpp"

namespace seidel {

/// Upper bound on the least Seidel eigenvalue of K_P,
///   n/k - 1 - (2/k) sum_{i<j} sqrt(n_i n_j),
/// as a double and as exact pieces.
struct LeastEigenvalueBound {
  double value = 0.0;
  /// n/k - 1
  mpq_class rational_part;
  /// -2/k
  mpq_class radical_coefficient;
  /// n_i * n_j for every i < j.
  std::vector<long> radicands;
  /// sum_{i<j} sqrt(n_i n_j) rewritten as sum a * sqrt(b), b squarefree,
  /// ascending in b: pairs (a, b).
  std::vector<std::pair<long, long>> simplified_radicals;

  /// The bound as an exact rational when every radicand is a perfect square
  /// (for instance when the parts are a common factor times squares).
  std::optional<mpq_class> exact_rational() const;
};

LeastEigenvalueBound least_eigenvalue_bound(const Partition& p);

/// D^{-1} B D with D = diag(1/sqrt(n_i)): entry (i, j) is
/// B_ij sqrt(n_i / n_j). Symmetric when B is the quotient matrix of P.
/// Throws DimensionError if B is not k x k.
RealMatrix symmetrize_quotient(const IntMatrix& b, const Partition& p);

/// x^T M x / x^T x. Throws ZeroVectorError for x == 0 and DimensionError on a
/// length mismatch.
double rayleigh_quotient(const RealMatrix& m, std::span<const double> x);

enum class SpectralRegime {
  null_graph,  // k = 1: S = J - I
  bipartite,   // k = 2: switching equivalent to the null graph
  general      // k >= 3 (includes the complete graph, k = n)
};

/// What the interlacing and multiplicity results predict for S(K_P).
struct EigenvalueIntervals {
  SpectralRegime regime;
  /// [2n_{i+1}-1, 2n_i-1] for the i-th largest eigenvalue, i = 1..k-1.
  std::vector<std::pair<long, long>> positive;
  /// Number of positive eigenvalues with multiplicity.
  long positive_count;
  long minus_one_multiplicity;
  /// k >= 3: exactly one eigenvalue lies below -1 and it is simple.
  bool simple_least_below_minus_one;
  /// Least eigenvalue when it is known in closed form (k <= 2, or k = n).
  std::optional<long> least_eigenvalue;
};

EigenvalueIntervals eigenvalue_intervals(const Partition& p);

}  // namespace seidel
