#pragma once

#include <gmpxx.h>

#include <vector>

#include "seidel/poly.hpp"
#include "seidel/real_matrix.hpp"

namespace seidel {

/// Input symmetry tolerance and convergence threshold of the Jacobi solver.
inline constexpr double kSymmetryTolerance = 1e-10;
inline constexpr double kJacobiRelativeTolerance = 1e-12;

/// Eigenvalues of a real symmetric matrix, descending. Cyclic Jacobi with
/// a fixed row-by-row sweep order, iterated until the off-diagonal Frobenius
/// norm is at most 1e-12 * ||M||_F. Throws AsymmetryError when
/// max |M - M^T| > 1e-10.
std::vector<double> symmetric_eigenvalues(const RealMatrix& m);

/// Number of distinct real roots, by a Sturm sequence over the rationals.
/// Throws ZeroPolynomialError.
int sturm_distinct_real_roots(const IntPolynomial& p);

/// Positive roots counted with multiplicity. Uses Descartes' rule of signs,
/// which is exact for real-rooted polynomials; real-rootedness is asserted
/// first with a Sturm count on the squarefree part (ConsistencyError if it
/// fails). Throws ZeroPolynomialError.
int positive_root_count(const IntPolynomial& p);

/// Roots strictly below `threshold`, with multiplicity (same method, applied
/// to p(threshold - y)).
int roots_below_count(const IntPolynomial& p, const mpz_class& threshold);

/// Largest e with (x - r)^e dividing p. Throws ZeroPolynomialError.
int exact_root_multiplicity(const IntPolynomial& p, const mpz_class& r);

/// Sign changes in the coefficient sequence, zeros skipped.
int descartes_sign_changes(const IntPolynomial& p);

/// p(a + s*y) as a polynomial in y, for s = +1 or -1.
IntPolynomial taylor_shift(const IntPolynomial& p, const mpz_class& a, int s = 1);

}  // namespace seidel
