#include "seidel/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "seidel/errors.hpp"
#include "seidel/kernels.hpp"

namespace seidel {

std::vector<double> symmetric_eigenvalues(const RealMatrix& input) {
  if (input.asymmetry() > kSymmetryTolerance) {
    throw AsymmetryError("matrix is not symmetric (max |M - M^T| = " + std::to_string(input.asymmetry()) + ")");
  }
  RealMatrix a = input;
  const std::size_t n = a.size();
  const double scale = a.frobenius_norm();
  const double target = kJacobiRelativeTolerance * scale;

  auto off_norm = [&] {
    long double acc = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) acc += static_cast<long double>(a(i, j)) * a(i, j);
      }
    }
    return static_cast<double>(std::sqrt(acc));
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (scale > 0.0 && off_norm() > target) {
    if (++sweep > kMaxSweeps) throw ConsistencyError("Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // Rows first (contiguous), then mirror into the columns.
        kernels::rotate_rows(a.row(p), a.row(q), c, s);
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          a(r, p) = a(p, r);
          a(r, q) = a(q, r);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

namespace {

// Positive multiple of the rational polynomial with coprime integer
// coefficients; sign information is preserved.
IntPolynomial primitive_part(const std::vector<mpq_class>& q) {
  mpz_class den = 1;
  for (const auto& c : q) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z(q.size());
  mpz_class g = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    z[i] = q[i].get_num() * (den / q[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
  }
  if (g > 1) {
    for (auto& c : z) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return IntPolynomial(std::move(z));
}

// Positive multiple of -(a mod b).
IntPolynomial negated_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpq_class> r(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  const mpq_class lead(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    if (r[static_cast<std::size_t>(i)] == 0) continue;
    const mpq_class f = r[static_cast<std::size_t>(i)] / lead;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= f * mpq_class(b.coeff(j));
  }
  r.resize(static_cast<std::size_t>(std::max(db, 0)));
  for (auto& c : r) c = -c;
  return primitive_part(r);
}

std::vector<IntPolynomial> sturm_chain(const IntPolynomial& p) {
  std::vector<IntPolynomial> chain{p};
  IntPolynomial d = p.derivative();
  while (!d.is_zero()) {
    chain.push_back(d);
    d = negated_remainder(chain[chain.size() - 2], chain.back());
  }
  return chain;
}

int sign_of(const mpz_class& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

int variations(const std::vector<int>& signs) {
  int count = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

struct SturmData {
  int distinct_real;
  int gcd_degree;
};

SturmData sturm(const IntPolynomial& p) {
  const auto chain = sturm_chain(p);
  std::vector<int> at_neg_inf;
  std::vector<int> at_pos_inf;
  for (const auto& f : chain) {
    const int lead = sign_of(f.leading());
    at_pos_inf.push_back(lead);
    at_neg_inf.push_back(f.degree() % 2 == 0 ? lead : -lead);
  }
  return {variations(at_neg_inf) - variations(at_pos_inf), chain.back().degree()};
}

}  // namespace

int sturm_distinct_real_roots(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("Sturm count of the zero polynomial");
  return sturm(p).distinct_real;
}

int descartes_sign_changes(const IntPolynomial& p) {
  std::vector<int> signs;
  for (const auto& c : p.coeffs()) signs.push_back(sign_of(c));
  return variations(signs);
}

int positive_root_count(const IntPolynomial& p) {
  if (p.is_zero()) throw ZeroPolynomialError("positive root count of the zero polynomial");
  const SturmData s = sturm(p);
  if (s.distinct_real != p.degree() - s.gcd_degree) {
    throw ConsistencyError("polynomial " + p.to_string() + " is not real-rooted");
  }
  return descartes_sign_changes(p);
}

IntPolynomial taylor_shift(const IntPolynomial& p, const mpz_class& a, int s) {
  const IntPolynomial arg(std::vector<mpz_class>{a, mpz_class(s)});
  IntPolynomial acc;
  for (int i = p.degree(); i >= 0; --i) {
    acc *= arg;
    acc += IntPolynomial::constant(p.coeff(i));
  }
  return acc;
}

int roots_below_count(const IntPolynomial& p, const mpz_class& threshold) {
  return positive_root_count(taylor_shift(p, threshold, -1));
}

int exact_root_multiplicity(const IntPolynomial& p, const mpz_class& r) {
  if (p.is_zero()) throw ZeroPolynomialError("root multiplicity in the zero polynomial");
  const IntPolynomial f = IntPolynomial::x_minus(r);
  IntPolynomial cur = p;
  IntPolynomial q;
  int e = 0;
  while (cur.degree() > 0 && try_divexact(cur, f, q)) {
    cur = std::move(q);
    ++e;
  }
  return e;
}

}  // namespace seidel
