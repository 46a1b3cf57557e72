#include "seidel/symmetric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "seidel/errors.hpp"

namespace seidel {

std::vector<mpz_class> elementary_symmetric(std::span<const long> values) {
  // Coefficients of prod (1 + v t), updated in place from the top down.
  std::vector<mpz_class> e(values.size() + 1);
  e[0] = 1;
  std::size_t len = 1;
  for (long v : values) {
    for (std::size_t i = len; i > 0; --i) e[i] += e[i - 1] * v;
    ++len;
  }
  return e;
}

std::vector<mpz_class> sigma_l(std::span<const long> values, std::size_t l) {
  if (l < 1 || l > values.size()) {
    throw IndexError("sigma_l: index " + std::to_string(l) + " outside 1.." + std::to_string(values.size()));
  }
  std::vector<long> others;
  others.reserve(values.size() - 1);
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j + 1 != l) others.push_back(values[j]);
  }
  const auto rest = elementary_symmetric(others);
  std::vector<mpz_class> out(values.size() + 1);
  out[0] = 0;
  for (std::size_t i = 1; i <= values.size(); ++i) out[i] = rest[i - 1] * values[l - 1];
  return out;
}

mpz_class binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

IntPolynomial from_roots(std::span<const mpz_class> roots) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (const auto& r : roots) p *= IntPolynomial::x_minus(r);
  return p;
}

namespace {

double log_abs(const mpz_class& x) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

// Fujiwara's bound on |root| for a monic polynomial with nonzero constant
// term, padded so float error cannot exclude a genuine integer root.
double root_bound(const IntPolynomial& p) {
  const int n = p.degree();
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 1; i <= n; ++i) {
    const mpz_class c = p.coeff(n - i);
    if (c == 0) continue;
    double l = log_abs(c);
    if (i == n) l -= std::log(2.0);
    best = std::max(best, l / i);
  }
  return 2.0 * std::exp(best) * (1.0 + 1e-9) + 1.0;
}

// Removes every copy of (x - r) from p; returns the multiplicity.
int deflate(IntPolynomial& p, const mpz_class& r) {
  const IntPolynomial f = IntPolynomial::x_minus(r);
  int mult = 0;
  IntPolynomial q;
  while (p.degree() > 0 && try_divexact(p, f, q)) {
    p = std::move(q);
    ++mult;
  }
  return mult;
}

}  // namespace

std::optional<std::vector<mpz_class>> integer_root_multiset(const IntPolynomial& p) {
  if (!p.is_monic()) throw NonMonicError("integer_root_multiset needs a monic polynomial, got " + p.to_string());
  std::vector<mpz_class> roots;
  IntPolynomial cur = p;
  while (cur.degree() > 0 && cur.coeff(0) == 0) {
    std::vector<mpz_class> shifted(cur.coeffs().begin() + 1, cur.coeffs().end());
    cur = IntPolynomial(std::move(shifted));
    roots.emplace_back(0);
  }

  auto try_candidate = [&](const mpz_class& d) {
    for (const mpz_class& r : {mpz_class(d), mpz_class(-d)}) {
      if (cur.evaluate(r) == 0) {
        const int m = deflate(cur, r);
        roots.insert(roots.end(), static_cast<std::size_t>(m), r);
        return true;
      }
    }
    return false;
  };

  constexpr double kDirectScanLimit = 1e7;
  while (cur.degree() > 0) {
    const mpz_class a0 = abs(cur.coeff(0));
    const double bound = root_bound(cur);
    bool found = false;
    if (bound <= kDirectScanLimit || a0 <= static_cast<unsigned long>(kDirectScanLimit)) {
      const mpz_class bound_z = static_cast<unsigned long>(std::min(bound, kDirectScanLimit * 2));
      const mpz_class limit = std::min(a0, bound_z);
      for (mpz_class d = 1; d <= limit && !found; ++d) {
        if (mpz_divisible_p(a0.get_mpz_t(), d.get_mpz_t()) && try_candidate(d)) found = true;
      }
    } else {
      // Enumerate divisor pairs (d, a0/d).
      const mpz_class root = sqrt(a0);
      for (mpz_class d = 1; d <= root && !found; ++d) {
        if (!mpz_divisible_p(a0.get_mpz_t(), d.get_mpz_t())) continue;
        if (try_candidate(d)) {
          found = true;
        } else {
          const mpz_class co = a0 / d;
          if (co != d && try_candidate(co)) found = true;
        }
      }
    }
    if (!found) return std::nullopt;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace seidel
