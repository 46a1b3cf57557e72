#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "generators.hpp"
#include "seidel/determination.hpp"
#include "seidel/errors.hpp"
#include "seidel/multipartite.hpp"
#include "seidel/survey.hpp"

using namespace seidel;

namespace {

IntPolynomial residual(const Partition& p) { return charpoly_coefficients(p).residual; }

}  // namespace

TEST_CASE("recover partitions examples") {
  CHECK(recover_partitions(residual(Partition({3, 2, 1})), 3, 6) == std::vector<Partition>{Partition({3, 2, 1})});
  CHECK(recover_partitions(residual(Partition({1, 1, 1})), 3, 3) == std::vector<Partition>{Partition({1, 1, 1})});
  CHECK(recover_partitions(residual(Partition({7})), 1, 7) == std::vector<Partition>{Partition({7})});
  // k = 2: the residual only sees n, so every bipartite split comes back.
  CHECK(recover_partitions(residual(Partition({3, 1})), 2, 4) ==
        std::vector<Partition>{Partition({2, 2}), Partition({3, 1})});
}

TEST_CASE("recover partitions rejects inconsistent data") {
  CHECK(recover_partitions(residual(Partition({3, 2, 1})), 3, 7).empty());
  CHECK(recover_partitions(residual(Partition({3, 2, 1})), 4, 6).empty());
  CHECK(recover_partitions(IntPolynomial{19, -9, -3, 2}, 3, 6).empty());
  IntPolynomial perturbed = residual(Partition({3, 2, 1})) + IntPolynomial{1};
  CHECK(recover_partitions(perturbed, 3, 6).empty());
  CHECK(recover_partitions(IntPolynomial{}, 0, 0).empty());
}

TEST_CASE("recovery round-trip and soundness on random partitions") {
  gen::Rng r;
  for (int t = 0; t < 150; ++t) {
    const Partition p = gen::partition_of(r, r.between(1, 24));
    const auto found = recover_partitions(residual(p), static_cast<long>(p.size()), p.order());
    CHECK(std::count(found.begin(), found.end(), p) == 1);
    CHECK(std::is_sorted(found.begin(), found.end()));
    for (const auto& q : found) CHECK(residual(q) == residual(p));
  }
}

TEST_CASE("cospectral classes") {
  const auto three = cospectral_classes(3);
  REQUIRE(three.size() == 2);
  CHECK(three[0].partitions == std::vector<Partition>{Partition({1, 1, 1})});
  CHECK(three[1].partitions == std::vector<Partition>{Partition({2, 1}), Partition({3})});

  const auto bip = cospectral_classes(4, 2);
  REQUIRE(bip.size() == 1);
  CHECK(bip[0].partitions == std::vector<Partition>{Partition({2, 2}), Partition({3, 1})});

  CHECK_THROWS_AS(cospectral_classes(31), CapExceededError);
  CHECK_THROWS_AS(cospectral_classes(0), InvalidPartitionError);

  for (long n = 1; n <= 14; ++n) {
    std::size_t total = 0;
    for (const auto& c : cospectral_classes(n)) {
      total += c.partitions.size();
      CHECK(std::is_sorted(c.partitions.begin(), c.partitions.end()));
      for (const auto& p : c.partitions) CHECK(charpoly_product(p).expanded == c.charpoly);
    }
    CHECK(total == partitions_of(n).size());
  }
}

TEST_CASE("class listing does not depend on the worker count") {
  const auto a = cospectral_classes(18, std::nullopt, 1);
  const auto b = cospectral_classes(18, std::nullopt, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].charpoly == b[i].charpoly);
    CHECK(a[i].partitions == b[i].partitions);
  }
  CHECK(verify_shared_part_property(18, std::nullopt, 1).to_json().dump() ==
        verify_shared_part_property(18, std::nullopt, 3).to_json().dump());
}

TEST_CASE("shared part property at small orders") {
  for (long n = 1; n <= 12; ++n) {
    const DeterminationReport r = verify_shared_part_property(n);
    CHECK(r.ok());
    CHECK(r.partitions_scanned == partitions_of(n).size());
    for (const auto& [p, v] : r.verdicts) {
      if (p.size() >= 3) CHECK(v == FamilyVerdict::singleton);
      if (p.size() <= 2 && n >= 2) CHECK(v == FamilyVerdict::bipartite_switching);
    }
  }
  const auto j = verify_shared_part_property(4).to_json();
  CHECK(j["order"] == "4");
  CHECK(j["verdicts"]["2,2"] == "bipartite_switching");
  CHECK(j["violations"].empty());
}

TEST_CASE("cospectral tripartite mates with disjoint part sizes") {
  CHECK(charpoly_product(Partition({6, 6, 1})).expanded == charpoly_product(Partition({9, 2, 2})).expanded);
  const DeterminationReport r = verify_shared_part_property(13);
  CHECK(r.ok());
  std::vector<std::vector<Partition>> mates;
  for (const auto& c : r.classes) {
    if (c.partitions.size() > 1 && c.partitions.front().size() >= 3) mates.push_back(c.partitions);
  }
  CHECK(mates == std::vector<std::vector<Partition>>{{Partition({6, 6, 1}), Partition({9, 2, 2})}});
  CHECK_FALSE(s_determined_in_family(Partition({6, 6, 1})));
  CHECK(check_forced_part_sizes(Partition({6, 6, 1})).candidates ==
        std::vector<Partition>{Partition({6, 6, 1}), Partition({9, 2, 2})});
}

TEST_CASE("forced part sizes") {
  const ForcedPartVerdict a = check_forced_part_sizes(Partition({2, 2, 2}));
  CHECK(a.rule == ForcingRule::repeated_part);
  CHECK(a.forced_eigenvalue == 3);
  CHECK(a.forced_eigenvalue_multiplicity >= 2);
  CHECK(a.determined);

  const ForcedPartVerdict b = check_forced_part_sizes(Partition({3, 1, 1}));
  CHECK(b.rule == ForcingRule::trailing_one_one);
  CHECK(b.forced_eigenvalue == 1);
  CHECK(b.determined);

  const ForcedPartVerdict c = check_forced_part_sizes(Partition({5, 2, 2, 1}));
  CHECK(c.rule == ForcingRule::trailing_two_two_one);
  CHECK(c.forced_eigenvalue == 3);
  CHECK(c.determined);

  const ForcedPartVerdict d = check_forced_part_sizes(Partition({2, 1}));
  CHECK(d.rule == ForcingRule::bipartite);
  CHECK(d.determined);

  const ForcedPartVerdict e = check_forced_part_sizes(Partition({4, 3, 2}));
  CHECK(e.rule == ForcingRule::none);
  CHECK_FALSE(e.determined);
}

TEST_CASE("family determination") {
  CHECK(s_determined_in_family(Partition({3, 2, 1})));
  CHECK(s_determined_in_family(Partition({1, 1, 1})));
  CHECK_FALSE(s_determined_in_family(Partition({3, 1})));
  CHECK_THROWS_AS(s_determined_in_family(Partition({31})), CapExceededError);
}

TEST_CASE("exhaustive survey at small orders") {
  // Switching classes of graphs up to isomorphism (equivalently, two-graphs).
  const std::size_t expected[] = {1, 1, 2, 3, 7, 16};
  for (int n = 1; n <= 6; ++n) {
    const SurveyReport r = exhaustive_switching_survey(n, n % 2 + 1);
    CHECK(r.ok());
    CHECK(r.graphs_scanned == labeled_graph_count(n));
    CHECK(r.switching_classes == expected[n - 1]);
    CHECK(r.rows.size() == partitions_of(n).size());
    for (const auto& row : r.rows) {
      CHECK(row.witnesses_replayed);
      CHECK(row.outside_family == 0);
      CHECK(row.cospectral_classes == 1);
    }
  }
  const SurveyReport four = exhaustive_switching_survey(4);
  const auto it = std::find_if(four.rows.begin(), four.rows.end(),
                               [](const SurveyPartitionRow& row) { return row.partition == Partition({2, 1, 1}); });
  REQUIRE(it != four.rows.end());
  CHECK(it->cospectral_graphs > 0);
  CHECK_THROWS_AS(exhaustive_switching_survey(8), CapExceededError);
}
