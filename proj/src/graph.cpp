#include "seidel/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "seidel/errors.hpp"
#include "seidel/kernels.hpp"

namespace seidel {

namespace {

VertexSet full_set(int n) { return n >= 64 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1); }

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxGraphOrder) {
    throw CapExceededError("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxGraphOrder));
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

Graph Graph::from_edge_mask(int n, std::uint64_t mask) {
  if (n > kMaxEdgeMaskOrder) throw CapExceededError("edge masks only cover orders up to 11");
  Graph g(n);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) {
        g.adj_[static_cast<std::size_t>(i)] |= VertexSet{1} << j;
        g.adj_[static_cast<std::size_t>(j)] |= VertexSet{1} << i;
      }
    }
  }
  return g;
}

Graph Graph::complete(int n) { return Graph(n).complement(); }

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw IndexError("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
}

int Graph::degree(int v) const { return std::popcount(adj_[static_cast<std::size_t>(v)]); }

int Graph::edge_count() const {
  int twice = 0;
  for (auto row : adj_) twice += std::popcount(row);
  return twice / 2;
}

VertexSet Graph::all_vertices() const { return full_set(n_); }

std::uint64_t Graph::edge_mask() const {
  if (n_ > kMaxEdgeMaskOrder) throw CapExceededError("edge masks only cover orders up to 11");
  std::uint64_t mask = 0;
  for (int j = 1; j < n_; ++j) {
    for (int i = 0; i < j; ++i) {
      if (adjacent(i, j)) mask |= std::uint64_t{1} << edge_index(i, j);
    }
  }
  return mask;
}

void Graph::set_edge(int u, int v, bool present) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw IndexError("self-loops are not allowed");
  if (present) {
    adj_[static_cast<std::size_t>(u)] |= VertexSet{1} << v;
    adj_[static_cast<std::size_t>(v)] |= VertexSet{1} << u;
  } else {
    adj_[static_cast<std::size_t>(u)] &= ~(VertexSet{1} << v);
    adj_[static_cast<std::size_t>(v)] &= ~(VertexSet{1} << u);
  }
}

Graph Graph::switched(VertexSet u) const {
  Graph h(n_);
  const VertexSet all = full_set(n_);
  for (int v = 0; v < n_; ++v) {
    // Links from v to the other side of the cut flip.
    const VertexSet other_side = ((u >> v) & 1U) ? (all & ~u) : u;
    h.adj_[static_cast<std::size_t>(v)] = (adj_[static_cast<std::size_t>(v)] ^ other_side) & all & ~(VertexSet{1} << v);
  }
  return h;
}

Graph Graph::complement() const {
  Graph h(n_);
  const VertexSet all = full_set(n_);
  for (int v = 0; v < n_; ++v) {
    h.adj_[static_cast<std::size_t>(v)] = ~adj_[static_cast<std::size_t>(v)] & all & ~(VertexSet{1} << v);
  }
  return h;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (adjacent(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

SeidelMatrix::SeidelMatrix(const Graph& g) : n_(g.order()), signs_(static_cast<std::size_t>(n_ * n_)) {
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (i != j) signs_[static_cast<std::size_t>(i * n_ + j)] = g.adjacent(i, j) ? -1 : 1;
    }
  }
}

IntMatrix SeidelMatrix::to_int_matrix() const {
  IntMatrix m(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = entry(i, j);
  }
  return m;
}

std::vector<double> SeidelMatrix::to_dense() const { return {signs_.begin(), signs_.end()}; }

std::vector<std::int64_t> seidel_charpoly_small(const SeidelMatrix& s) {
  return seidel_charpoly_small(s.signs(), s.order());
}

std::vector<std::int64_t> seidel_charpoly_small(std::span<const std::int8_t> signs, int n) {
  if (n < 0 || signs.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    throw DimensionError("sign matrix is not n x n");
  }
  if (n > kFastCharpolyOrder) throw CapExceededError("machine-integer charpoly limited to order 16");
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::int64_t> c(un + 1, 0);
  c[un] = 1;
  thread_local std::vector<std::int64_t> mk;
  thread_local std::vector<std::int64_t> am;
  mk.assign(un * un, 0);
  am.assign(un * un, 0);
  for (std::size_t i = 0; i < un; ++i) mk[i * un + i] = 1;
  for (std::size_t k = 1; k <= un; ++k) {
    kernels::signed_matmul(signs, mk, am, un);
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < un; ++i) trace += am[i * un + i];
    c[un - k] = -trace / static_cast<std::int64_t>(k);
    if (k == un) break;
    for (std::size_t i = 0; i < un; ++i) am[i * un + i] += c[un - k];
    std::swap(mk, am);
  }
  return c;
}

IntPolynomial seidel_charpoly(const Graph& g) {
  const SeidelMatrix s(g);
  if (g.order() <= kFastCharpolyOrder) {
    const auto small = seidel_charpoly_small(s);
    std::vector<mpz_class> c;
    c.reserve(small.size());
    for (auto v : small) c.emplace_back(static_cast<long>(v));
    return IntPolynomial(std::move(c));
  }
  return charpoly_oracle(s.to_int_matrix());
}

Graph seidel_switch(const Graph& g, VertexSet u) {
  const VertexSet all = g.all_vertices();
  if ((u & ~all) != 0) {
    throw IndexError("switching set names vertex " + std::to_string(std::countr_zero(u & ~all)) +
                     " outside a graph of order " + std::to_string(g.order()));
  }
  return g.switched(u);
}

Graph seidel_switch(const Graph& g, std::span<const int> u) {
  for (int v : u) {
    if (v < 0 || v >= g.order()) throw IndexError("switching set names vertex " + std::to_string(v));
  }
  return seidel_switch(g, vertex_set_from(u));
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw DimensionError("permutation length differs from graph order");
  VertexSet seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= n || ((seen >> p) & 1U)) throw IndexError("not a permutation of the vertex set");
    seen |= VertexSet{1} << p;
  }
  Graph h(n);
  for (const auto& [a, b] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(a)], perm[static_cast<std::size_t>(b)]);
  return h;
}

Graph normalize_at(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw IndexError("base vertex outside graph");
  return seidel_switch(g, g.neighbours(v));
}

Graph complete_multipartite(const Partition& p) {
  if (p.order() > kMaxGraphOrder) throw CapExceededError("complete multipartite graph larger than 64 vertices");
  const int n = static_cast<int>(p.order());
  Graph g = Graph::complete(n);
  int start = 0;
  for (long size : p.parts()) {
    for (int a = start; a < start + size; ++a) {
      for (int b = a + 1; b < start + size; ++b) g.remove_edge(a, b);
    }
    start += static_cast<int>(size);
  }
  return g;
}

std::optional<Partition> recognize_complete_multipartite(const Graph& g) {
  const int n = g.order();
  if (n == 0) return std::nullopt;
  const Graph co = g.complement();
  VertexSet unseen = g.all_vertices();
  std::vector<long> sizes;
  while (unseen != 0) {
    const int v = std::countr_zero(unseen);
    // Component of v in the complement must be a clique there, i.e. exactly
    // v together with its complement-neighbourhood, and closed.
    const VertexSet part = co.neighbours(v) | (VertexSet{1} << v);
    for (VertexSet rest = part; rest != 0; rest &= rest - 1) {
      const int w = std::countr_zero(rest);
      if ((co.neighbours(w) | (VertexSet{1} << w)) != part) return std::nullopt;
    }
    sizes.push_back(std::popcount(part));
    unseen &= ~part;
  }
  return Partition(std::move(sizes));
}

std::uint64_t labeled_graph_count(int n) {
  if (n > kMaxEdgeMaskOrder) throw CapExceededError("labeled graph count overflows 64 bits");
  if (n < 2) return 1;
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

void for_each_graph(int n, std::uint64_t first, std::uint64_t last, const std::function<void(const Graph&)>& fn) {
  if (n > kExhaustiveOrderCap) {
    throw CapExceededError("exhaustive enumeration capped at order " + std::to_string(kExhaustiveOrderCap));
  }
  last = std::min(last, labeled_graph_count(n));
  for (std::uint64_t mask = first; mask < last; ++mask) fn(Graph::from_edge_mask(n, mask));
}

void for_each_graph(int n, const std::function<void(const Graph&)>& fn) {
  for_each_graph(n, 0, labeled_graph_count(std::min(n, kExhaustiveOrderCap + 1)), fn);
}

std::string vertex_set_to_string(VertexSet s) {
  std::string out = "[";
  bool first = true;
  for (; s != 0; s &= s - 1) {
    if (!first) out += ',';
    out += std::to_string(std::countr_zero(s));
    first = false;
  }
  return out + "]";
}

VertexSet vertex_set_from(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= kMaxGraphOrder) throw IndexError("vertex " + std::to_string(v) + " out of range");
    s |= VertexSet{1} << v;
  }
  return s;
}

}  // namespace seidel
