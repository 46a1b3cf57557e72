#include "seidel/poly.hpp"

#include <algorithm>
#include <utility>

#include "seidel/errors.hpp"

namespace seidel {

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPolynomial IntPolynomial::constant(const mpz_class& c) { return IntPolynomial(std::vector<mpz_class>{c}); }

IntPolynomial IntPolynomial::x_minus(const mpz_class& root) {
  return IntPolynomial(std::vector<mpz_class>{-root, mpz_class(1)});
}

IntPolynomial IntPolynomial::monomial(const mpz_class& c, int degree) {
  std::vector<mpz_class> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& IntPolynomial::leading() const {
  if (coeffs_.empty()) throw ZeroPolynomialError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

mpz_class IntPolynomial::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class IntPolynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + mpq_class(*it);
  }
  acc.canonicalize();
  return acc;
}

double IntPolynomial::evaluate(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const mpz_class& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator<(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const auto& x = a.coeffs_[static_cast<std::size_t>(i)];
    const auto& y = b.coeffs_[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (mag != 1 || i == 0) out += mag.get_str();
    if (i >= 1) out += var;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

std::vector<std::string> IntPolynomial::coefficient_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  if (out.empty()) out.emplace_back("0");
  return out;
}

IntPolynomial pow(const IntPolynomial& base, unsigned exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent != 0) b *= b;
  }
  return result;
}

bool try_divexact(const IntPolynomial& p, const IntPolynomial& q, IntPolynomial& quotient) {
  if (q.is_zero()) return false;
  if (p.is_zero()) {
    quotient = IntPolynomial();
    return true;
  }
  if (p.degree() < q.degree()) return false;

  std::vector<mpz_class> rem = p.coeffs();
  const auto& den = q.coeffs();
  const int dq = q.degree();
  std::vector<mpz_class> quot(static_cast<std::size_t>(p.degree() - dq) + 1);
  mpz_class t;
  for (int i = p.degree() - dq; i >= 0; --i) {
    mpz_class& top = rem[static_cast<std::size_t>(i + dq)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), den.back().get_mpz_t())) return false;
    mpz_divexact(t.get_mpz_t(), top.get_mpz_t(), den.back().get_mpz_t());
    quot[static_cast<std::size_t>(i)] = t;
    for (int j = 0; j <= dq; ++j) rem[static_cast<std::size_t>(i + j)] -= t * den[static_cast<std::size_t>(j)];
  }
  for (int j = 0; j < dq; ++j) {
    if (rem[static_cast<std::size_t>(j)] != 0) return false;
  }
  quotient = IntPolynomial(std::move(quot));
  return true;
}

IntPolynomial divexact(const IntPolynomial& p, const IntPolynomial& q) {
  if (q.is_zero()) throw ExactDivisionError("division by the zero polynomial");
  IntPolynomial quotient;
  if (!try_divexact(p, q, quotient)) {
    throw ExactDivisionError(q.to_string() + " does not divide " + p.to_string() + " over the integers");
  }
  return quotient;
}

}  // namespace seidel
