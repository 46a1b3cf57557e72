#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "generators.hpp"
#include "seidel/bounds.hpp"
#include "seidel/errors.hpp"
#include "seidel/graph.hpp"
#include "seidel/multipartite.hpp"
#include "seidel/spectra.hpp"
#include "seidel/symmetric.hpp"

using namespace seidel;

TEST_CASE("partition parsing and enumeration") {
  CHECK(Partition::parse("3,2,1").parts().size() == 3);
  CHECK(Partition::parse("1,3,2") == Partition({3, 2, 1}));
  CHECK(Partition::parse("2*3,1*2") == Partition({3, 3, 2}));
  CHECK(Partition::parse(" 4 ") == Partition({4}));
  for (const char* bad : {"", "0,2", "-1", "3,,2", "a", "2*", "*3", "0*3", "3,2,"}) {
    CHECK_THROWS_AS(Partition::parse(bad), ParseError);
  }
  CHECK_THROWS_AS(Partition({2, 0}), InvalidPartitionError);
  CHECK(Partition({3, 3, 2}).to_grouped_string() == "2*3,2");
  CHECK(Partition({3, 3, 2}).to_string() == "3,3,2");

  const long counts[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
  for (long n = 1; n <= 12; ++n) CHECK(static_cast<long>(partitions_of(n).size()) == counts[n - 1]);
  CHECK(partitions_of(20).size() == 627);
  const auto four = partitions_of(4);
  CHECK(four.front() == Partition({4}));
  CHECK(four[1] == Partition({3, 1}));
  CHECK(four.back() == Partition({1, 1, 1, 1}));
  CHECK(partitions_of(6, 3).size() == 3);
}

TEST_CASE("quotient matrix") {
  CHECK(quotient_matrix(Partition({1, 1})) == IntMatrix{{0, -1}, {-1, 0}});
  CHECK(quotient_matrix(Partition({3, 2, 1})) == IntMatrix{{2, -2, -1}, {-3, 1, -1}, {-3, -2, 0}});
}

TEST_CASE("closed-form examples") {
  const Partition p({3, 2, 1});
  const FactoredSeidelPoly f = charpoly_coefficients(p);
  CHECK(f.residual == IntPolynomial{19, -9, -3, 1});
  CHECK(f.plus_one_power == 3);
  CHECK(f.to_string() == "(x+1)^3 * (x^3-3x^2-9x+19)");
  CHECK(charpoly_coefficients(Partition({1, 1, 1, 1})).expanded == IntPolynomial{-3, 8, -6, 0, 1});
  CHECK(charpoly_coefficients(Partition({1, 1, 1, 1})).expanded ==
        pow(IntPolynomial::x_minus(1), 3) * IntPolynomial::x_minus(-3));
  CHECK(charpoly_product(Partition({5})).to_string() == "(x+1)^4 * (x-4)");
  const FactoredSeidelPoly g = charpoly_grouped_product(Partition({2, 2, 2}));
  CHECK(g.repeated == std::vector<LinearFactorPower>{{3, 2}});
  CHECK(charpoly_grouped_coefficients(p).expanded == f.expanded);
  CHECK(charpoly_grouped_coefficients(p).residual == f.residual);
}

TEST_CASE("closed forms agree with the oracle for every partition of n <= 12") {
  for (long n = 1; n <= 12; ++n) {
    for (const auto& p : partitions_of(n)) {
      const IntPolynomial oracle = charpoly_oracle(seidel_matrix(complete_multipartite(p)).to_int_matrix());
      CHECK(charpoly_product(p).expanded == oracle);
      CHECK(charpoly_grouped_product(p).expanded == oracle);
      CHECK(charpoly_coefficients(p).expanded == oracle);
      CHECK(charpoly_grouped_coefficients(p).expanded == oracle);
    }
  }
}

TEST_CASE("closed forms agree on large random partitions") {
  gen::Rng r;
  for (int t = 0; t < 100; ++t) {
    const Partition p = gen::partition_k(r, r.between(1, 12), 40);
    const IntPolynomial a = charpoly_product(p).expanded;
    CHECK(charpoly_grouped_product(p).expanded == a);
    CHECK(charpoly_coefficients(p).expanded == a);
    CHECK(charpoly_grouped_coefficients(p).expanded == a);
    CHECK(a.degree() == p.order());
  }
}

TEST_CASE("the quotient charpoly is the residual") {
  gen::Rng r;
  for (int t = 0; t < 100; ++t) {
    const Partition p = gen::partition_of(r, r.between(1, 25));
    CHECK(charpoly_oracle(quotient_matrix(p)) == charpoly_coefficients(p).residual);
  }
}

TEST_CASE("the printed k = 3, 4, 5 expansions") {
  gen::Rng r;
  for (long k = 3; k <= 5; ++k) {
    for (int t = 0; t < 25; ++t) {
      const Partition p = gen::partition_k(r, k, 15);
      const auto s = elementary_symmetric(p.parts());
      const mpz_class n = p.order();
      std::vector<mpz_class> c;
      if (k == 3) c = {1 - n + 4 * s[3], 3 - 2 * n, 3 - n, 1};
      if (k == 4) c = {1 - n + 4 * s[3] - 16 * s[4], 4 - 3 * n + 4 * s[3], 6 - 3 * n, 4 - n, 1};
      if (k == 5) {
        c = {1 - n + 4 * s[3] - 16 * s[4] + 48 * s[5], 5 - 4 * n + 8 * s[3] - 16 * s[4], 10 - 6 * n + 4 * s[3],
             10 - 4 * n, 5 - n, 1};
      }
      CHECK(charpoly_coefficients(p).residual == IntPolynomial(c));
    }
  }
}

TEST_CASE("least-eigenvalue bound examples") {
  for (long k = 2; k <= 8; ++k) {
    const LeastEigenvalueBound b = least_eigenvalue_bound(Partition(std::vector<long>(static_cast<std::size_t>(k), 1)));
    CHECK(b.value == doctest::Approx(-(k - 1)).epsilon(1e-12));
    REQUIRE(b.exact_rational().has_value());
    CHECK(*b.exact_rational() == -(k - 1));
  }
  CHECK(least_eigenvalue_bound(Partition({2, 2, 2})).value == doctest::Approx(-3.0));
  const LeastEigenvalueBound b = least_eigenvalue_bound(Partition({3, 2, 1}));
  CHECK(b.value == doctest::Approx(1.0 - (2.0 / 3.0) * (std::sqrt(6.0) + std::sqrt(3.0) + std::sqrt(2.0))));
  CHECK(b.rational_part == 1);
  CHECK(b.radical_coefficient == mpq_class(-2, 3));
  CHECK(b.simplified_radicals == std::vector<std::pair<long, long>>{{1, 2}, {1, 3}, {1, 6}});
  CHECK_FALSE(b.exact_rational().has_value());
  CHECK(least_eigenvalue_bound(Partition({8, 2})).simplified_radicals == std::vector<std::pair<long, long>>{{4, 1}});
}

TEST_CASE("symmetrized quotient and Rayleigh quotients") {
  const RealMatrix b11 = symmetrize_quotient(quotient_matrix(Partition({1, 1})), Partition({1, 1}));
  const double ones2[] = {1, 1};
  CHECK(rayleigh_quotient(b11, ones2) == doctest::Approx(-1.0));
  const RealMatrix b222 = symmetrize_quotient(quotient_matrix(Partition({2, 2, 2})), Partition({2, 2, 2}));
  const double ones3[] = {1, 1, 1};
  CHECK(rayleigh_quotient(b222, ones3) == doctest::Approx(-3.0));
  CHECK(rayleigh_quotient(RealMatrix::identity(3), std::vector<double>{0.3, -2, 5}) == doctest::Approx(1.0));
  const double zeros[] = {0, 0, 0};
  CHECK_THROWS_AS(rayleigh_quotient(b222, zeros), ZeroVectorError);
  CHECK_THROWS_AS(rayleigh_quotient(b222, ones2), DimensionError);
  CHECK_THROWS_AS(symmetrize_quotient(quotient_matrix(Partition({1, 1})), Partition({1, 1, 1})), DimensionError);

  gen::Rng r;
  for (int t = 0; t < 100; ++t) {
    const Partition p = gen::partition_of(r, r.between(1, 30));
    const RealMatrix m = symmetrize_quotient(quotient_matrix(p), p);
    CHECK(m.asymmetry() < 1e-12);
    const std::vector<double> x(p.size(), 1.0);
    CHECK(rayleigh_quotient(m, x) == doctest::Approx(least_eigenvalue_bound(p).value).epsilon(1e-12));
  }
}

TEST_CASE("interval predictions") {
  const EigenvalueIntervals a = eigenvalue_intervals(Partition({1, 1, 1}));
  CHECK(a.positive == std::vector<std::pair<long, long>>{{1, 1}, {1, 1}});
  CHECK(a.minus_one_multiplicity == 0);
  CHECK(a.least_eigenvalue == -2);
  const EigenvalueIntervals b = eigenvalue_intervals(Partition({4, 4}));
  CHECK(b.positive_count == 1);
  CHECK(b.minus_one_multiplicity == 7);
  CHECK(b.least_eigenvalue == -1);
  const EigenvalueIntervals c = eigenvalue_intervals(Partition({1}));
  CHECK(c.positive_count == 0);
  CHECK(c.minus_one_multiplicity == 0);
  const EigenvalueIntervals d = eigenvalue_intervals(Partition({1, 1}));
  CHECK(d.minus_one_multiplicity == 1);
}
