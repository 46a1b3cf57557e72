#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "seidel/errors.hpp"
#include "seidel/graph.hpp"
#include "seidel/graph6.hpp"
#include "seidel/int_matrix.hpp"
#include "seidel/switching.hpp"

using namespace seidel;

namespace {

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph cycle(int n) {
  Graph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

Graph star(int leaves) {
  Graph g(leaves + 1);
  for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
  return g;
}

// Switching equivalence by trying every switch set and every permutation.
bool brute_force_equivalent(const Graph& g, const Graph& h, bool relabel_allowed) {
  if (g.order() != h.order()) return false;
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  do {
    for (VertexSet u = 0; u < (VertexSet{1} << n); ++u) {
      if (relabel(seidel_switch(g, u), perm) == h) return true;
    }
  } while (relabel_allowed && std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("Seidel matrix examples") {
  const SeidelMatrix empty(Graph(3));
  const SeidelMatrix full(Graph::complete(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(empty.entry(i, j) == (i == j ? 0 : 1));
      CHECK(full.entry(i, j) == (i == j ? 0 : -1));
    }
  }
  CHECK(SeidelMatrix(path(3)).to_int_matrix() == IntMatrix{{0, -1, 1}, {-1, 0, -1}, {1, -1, 0}});
}

TEST_CASE("graph basics") {
  Graph g(4);
  g.add_edge(0, 3);
  CHECK(g.adjacent(3, 0));
  CHECK(g.edge_count() == 1);
  CHECK_THROWS_AS(g.add_edge(1, 1), IndexError);
  CHECK_THROWS_AS(g.add_edge(0, 4), IndexError);
  CHECK(g.complement().edge_count() == 5);
  CHECK(Graph::from_edge_mask(4, g.edge_mask()) == g);
  CHECK_THROWS_AS(Graph(65), CapExceededError);
}

TEST_CASE("switching examples") {
  gen::Rng r;
  const Graph g = gen::graph(r, 6);
  CHECK(seidel_switch(g, VertexSet{0}) == g);
  // Switching a star at its centre deletes every edge; the leaves stay non-adjacent.
  CHECK(seidel_switch(star(2), VertexSet{1}) == Graph(3));
  const int first[] = {0, 1, 2};
  CHECK(seidel_switch(Graph(5), std::span<const int>(first)) == complete_multipartite(Partition({3, 2})));
  const int two[] = {0, 1};
  CHECK(recognize_complete_multipartite(seidel_switch(Graph(5), std::span<const int>(two))) == Partition({3, 2}));
  const int bad[] = {0, 5};
  CHECK_THROWS_AS(seidel_switch(Graph(5), std::span<const int>(bad)), IndexError);
  CHECK_THROWS_AS(seidel_switch(Graph(5), VertexSet{1} << 5), IndexError);
}

TEST_CASE("switching is an involution and preserves the charpoly") {
  gen::Rng r;
  for (int t = 0; t < 300; ++t) {
    const int n = static_cast<int>(r.between(1, 12));
    const Graph g = gen::graph(r, n);
    const VertexSet u = gen::subset(r, n);
    const Graph h = seidel_switch(g, u);
    CHECK(seidel_switch(h, u) == g);
    CHECK(seidel_switch(g, g.all_vertices() & ~u) == h);
    CHECK(seidel_charpoly(h) == seidel_charpoly(g));
    const auto perm = gen::permutation(r, n);
    CHECK(seidel_charpoly(relabel(g, perm)) == seidel_charpoly(g));
  }
}

TEST_CASE("normalization isolates the base vertex and is switching-invariant") {
  gen::Rng r;
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(r.between(1, 10));
    const Graph g = gen::graph(r, n);
    const int v = static_cast<int>(r.between(0, n - 1));
    const Graph ng = normalize_at(g, v);
    CHECK(ng.degree(v) == 0);
    CHECK(normalize_at(seidel_switch(g, gen::subset(r, n)), v) == ng);
  }
}

TEST_CASE("fast charpoly matches the big-integer oracle") {
  gen::Rng r;
  for (int n = 0; n <= kFastCharpolyOrder; ++n) {
    for (int t = 0; t < 6; ++t) {
      const Graph g = gen::graph(r, n, t / 6.0);
      const auto small = seidel_charpoly_small(seidel_matrix(g));
      const IntPolynomial oracle = charpoly_oracle(seidel_matrix(g).to_int_matrix());
      REQUIRE(small.size() == static_cast<std::size_t>(n + 1));
      for (int i = 0; i <= n; ++i) CHECK(mpz_class(static_cast<long>(small[static_cast<std::size_t>(i)])) == oracle.coeff(i));
    }
  }
  CHECK_THROWS_AS(seidel_charpoly_small(seidel_matrix(Graph(17))), CapExceededError);
  const Graph big = gen::graph(r, 20);
  CHECK(seidel_charpoly(big) == charpoly_oracle(seidel_matrix(big).to_int_matrix()));
}

TEST_CASE("complete multipartite graphs") {
  CHECK(complete_multipartite(Partition({1, 1, 1})) == Graph::complete(3));
  CHECK(complete_multipartite(Partition({4})) == Graph(4));
  CHECK(graph_isomorphic(complete_multipartite(Partition({2, 2})), cycle(4)).has_value());
  CHECK_THROWS_AS(Partition(std::vector<long>{}), EmptyPartitionError);
}

TEST_CASE("recognizing complete multipartite graphs") {
  CHECK(recognize_complete_multipartite(cycle(4)) == Partition({2, 2}));
  CHECK(recognize_complete_multipartite(path(3)) == Partition({2, 1}));
  CHECK_FALSE(recognize_complete_multipartite(path(4)).has_value());
  CHECK_FALSE(recognize_complete_multipartite(Graph(0)).has_value());
  gen::Rng r;
  for (int t = 0; t < 200; ++t) {
    const Partition p = gen::partition_of(r, r.between(1, 20));
    const Graph g = complete_multipartite(p);
    CHECK(recognize_complete_multipartite(g) == p);
    CHECK(recognize_complete_multipartite(relabel(g, gen::permutation(r, g.order()))) == p);
  }
}

TEST_CASE("enumeration counts") {
  int count = 0;
  for_each_graph(1, [&](const Graph&) { ++count; });
  CHECK(count == 1);
  count = 0;
  for_each_graph(3, [&](const Graph&) { ++count; });
  CHECK(count == 8);
  std::set<std::uint64_t> seen;
  for_each_graph(4, [&](const Graph& g) { seen.insert(g.edge_mask()); });
  CHECK(seen.size() == 64);
  CHECK(labeled_graph_count(7) == 2097152);
  CHECK_THROWS_AS(for_each_graph(8, [](const Graph&) {}), CapExceededError);
}

TEST_CASE("graph6 round-trip and fixed encodings") {
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph::complete(4)) == "C~");
  CHECK(to_graph6(cycle(4)) == "Cl");
  CHECK(from_graph6(">>graph6<<Cl\n") == cycle(4));
  CHECK_THROWS_AS(from_graph6(""), ParseError);
  CHECK_THROWS_AS(from_graph6("C"), ParseError);
  CHECK_THROWS_AS(from_graph6("C\x7f"), ParseError);
  CHECK_THROWS_AS(from_graph6("Bx"), ParseError);  // nonzero padding bits
  gen::Rng r;
  for (int t = 0; t < 200; ++t) {
    const Graph g = gen::graph(r, static_cast<int>(r.between(0, 64)));
    CHECK(from_graph6(to_graph6(g)) == g);
  }
}

TEST_CASE("isomorphism examples") {
  CHECK(graph_isomorphic(path(3), relabel(path(3), std::vector<int>{2, 0, 1})).has_value());
  CHECK_FALSE(graph_isomorphic(Graph::complete(3), Graph(3)).has_value());
  CHECK_FALSE(graph_isomorphic(cycle(4), star(3)).has_value());
  const auto id = graph_isomorphic(cycle(5), cycle(5));
  REQUIRE(id.has_value());
  CHECK(*id == Permutation{0, 1, 2, 3, 4});
}

TEST_CASE("isomorphism returns a valid map on random relabelings") {
  gen::Rng r;
  for (int t = 0; t < 200; ++t) {
    const int n = static_cast<int>(r.between(1, 14));
    const Graph g = gen::graph(r, n, r.coin() ? 0.5 : 0.2);
    const Graph h = relabel(g, gen::permutation(r, n));
    const auto m = graph_isomorphic(g, h);
    REQUIRE(m.has_value());
    CHECK(relabel(g, *m) == h);
  }
}

TEST_CASE("switching equivalence examples") {
  gen::Rng r;
  const Graph g = gen::graph(r, 6);
  const auto self = switching_equivalent(g, g);
  REQUIRE(self.has_value());
  CHECK(self->switch_set == 0);
  CHECK(self->perm == Permutation{0, 1, 2, 3, 4, 5});

  const Graph k23 = complete_multipartite(Partition({3, 2}));
  const auto w = switching_equivalent(k23, Graph(5));
  REQUIRE(w.has_value());
  CHECK((w->switch_set == 0b00111 || w->switch_set == 0b11000));
  CHECK(apply_witness(k23, *w) == Graph(5));

  CHECK_FALSE(switching_equivalent(complete_multipartite(Partition({2, 1, 1})), complete_multipartite(Partition({3, 1})))
                  .has_value());
  CHECK_FALSE(switching_equivalent(Graph(3), Graph(4)).has_value());
  CHECK_THROWS_AS(switching_equivalent(Graph(11), Graph(11)), CapExceededError);
}

TEST_CASE("switching equivalence agrees with brute force") {
  gen::Rng r;
  for (int t = 0; t < 150; ++t) {
    const int n = static_cast<int>(r.between(1, 6));
    const Graph g = gen::graph(r, n);
    // Half the time build an equivalent partner, otherwise an arbitrary one.
    const Graph h = r.coin() ? relabel(seidel_switch(g, gen::subset(r, n)), gen::permutation(r, n)) : gen::graph(r, n);
    for (bool relabel_allowed : {true, false}) {
      const auto mode = relabel_allowed ? SwitchingMode::with_relabeling : SwitchingMode::label_preserving;
      const auto w = switching_equivalent(g, h, mode);
      CHECK(w.has_value() == brute_force_equivalent(g, h, relabel_allowed));
      if (w) {
        CHECK(apply_witness(g, *w) == h);
        if (!relabel_allowed) CHECK(std::is_sorted(w->perm.begin(), w->perm.end()));
      }
    }
  }
}
