#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

namespace seidel {

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
///
/// `coeffs()[i]` is the coefficient of x^i. The representation is kept
/// normalized: no trailing zero coefficients, so the zero polynomial has an
/// empty coefficient vector and `degree() == -1`.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  /// x - root
  static IntPolynomial x_minus(const mpz_class& root);
  static IntPolynomial monomial(const mpz_class& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const mpz_class& leading() const;
  mpz_class coeff(int i) const;
  const std::vector<mpz_class>& coeffs() const { return coeffs_; }

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;
  double evaluate(double x) const;
  IntPolynomial derivative() const;

  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const mpz_class& scalar);

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs += rhs; }
  friend IntPolynomial operator-(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs -= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const IntPolynomial& rhs) { return lhs *= rhs; }
  friend IntPolynomial operator*(IntPolynomial lhs, const mpz_class& rhs) { return lhs *= rhs; }
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }
  /// Total order (degree, then coefficients from the top); used as a map key.
  friend bool operator<(const IntPolynomial& a, const IntPolynomial& b);

  /// Human-readable form, highest degree first, e.g. "x^3-3x^2-9x+19".
  std::string to_string(const std::string& var = "x") const;
  /// Decimal coefficient strings, constant term first.
  std::vector<std::string> coefficient_strings() const;

 private:
  void normalize();

  std::vector<mpz_class> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, unsigned exponent);

/// Exact quotient p / q over the integers. Throws ExactDivisionError when
/// q is zero or does not divide p with zero remainder in Z[x].
IntPolynomial divexact(const IntPolynomial& p, const IntPolynomial& q);

/// Quotient if q divides p exactly in Z[x], otherwise false.
bool try_divexact(const IntPolynomial& p, const IntPolynomial& q, IntPolynomial& quotient);

}  // namespace seidel
