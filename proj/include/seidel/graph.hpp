#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "seidel/int_matrix.hpp"
#include "seidel/partition.hpp"

namespace seidel {

/// Largest supported order: one 64-bit neighbourhood word per vertex.
inline constexpr int kMaxGraphOrder = 64;
/// Largest order whose whole edge set fits in one 64-bit edge mask.
inline constexpr int kMaxEdgeMaskOrder = 11;
/// Largest order `for_each_graph` will enumerate exhaustively.
inline constexpr int kExhaustiveOrderCap = 7;

/// Vertex subset as a bitmask (bit v set <=> vertex v in the set).
using VertexSet = std::uint64_t;

/// Simple undirected graph on vertices 0..n-1, stored as neighbourhood
/// bitmasks.
class Graph {
 public:
  Graph() = default;
  /// Edgeless graph of order n. Throws CapExceededError above kMaxGraphOrder.
  explicit Graph(int n);
  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);
  /// Edge (i, j), i < j, is bit j(j-1)/2 + i: the column order of graph6.
  static Graph from_edge_mask(int n, std::uint64_t mask);
  static Graph complete(int n);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return ((adj_[static_cast<std::size_t>(u)] >> v) & 1U) != 0; }
  VertexSet neighbours(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;
  int edge_count() const;
  VertexSet all_vertices() const;
  std::uint64_t edge_mask() const;

  void add_edge(int u, int v) { set_edge(u, v, true); }
  void remove_edge(int u, int v) { set_edge(u, v, false); }
  void set_edge(int u, int v, bool present);

  Graph complement() const;
  /// Seidel switching at U without bounds checks; see seidel_switch.
  Graph switched(VertexSet u) const;
  std::vector<std::pair<int, int>> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

inline std::size_t edge_index(int i, int j) {
  if (i > j) std::swap(i, j);
  return static_cast<std::size_t>(j) * static_cast<std::size_t>(j - 1) / 2 + static_cast<std::size_t>(i);
}

/// Seidel matrix J - I - 2A: 0 on the diagonal, -1 for edges, +1 for
/// non-edges. Equivalently, the adjacency matrix of the signed complete graph
/// whose negative edges are the edges of the source graph.
class SeidelMatrix {
 public:
  explicit SeidelMatrix(const Graph& g);

  int order() const { return n_; }
  int entry(int i, int j) const { return signs_[static_cast<std::size_t>(i * n_ + j)]; }
  /// Row-major entries in {-1, 0, +1}.
  std::span<const std::int8_t> signs() const { return signs_; }

  IntMatrix to_int_matrix() const;
  /// Row-major doubles, for numeric eigenvalues.
  std::vector<double> to_dense() const;

 private:
  int n_ = 0;
  std::vector<std::int8_t> signs_;
};

inline SeidelMatrix seidel_matrix(const Graph& g) { return SeidelMatrix(g); }

/// Exact det(xI - S(G)). Orders up to kFastCharpolyOrder take a
/// machine-integer Faddeev-LeVerrier path driven by the SIMD kernels; larger
/// orders fall back to the big-integer oracle.
IntPolynomial seidel_charpoly(const Graph& g);
inline constexpr int kFastCharpolyOrder = 16;
/// The machine-integer path alone, coefficients constant term first.
/// Throws CapExceededError above kFastCharpolyOrder.
std::vector<std::int64_t> seidel_charpoly_small(const SeidelMatrix& s);
/// Same, on raw row-major signs of an n x n Seidel matrix.
std::vector<std::int64_t> seidel_charpoly_small(std::span<const std::int8_t> signs, int n);

/// Seidel switching: complements every edge between U and its complement.
/// Throws IndexError when U names a vertex outside the graph.
Graph seidel_switch(const Graph& g, VertexSet u);
Graph seidel_switch(const Graph& g, std::span<const int> u);

/// The graph H with H(perm[a], perm[b]) = G(a, b). perm must be a
/// permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const int> perm);

/// Switch at the neighbourhood of v, which isolates v (its Seidel row
/// becomes all +1).
Graph normalize_at(const Graph& g, int v);

/// K_{n_1,...,n_k}; vertices grouped consecutively by part, largest first.
Graph complete_multipartite(const Partition& p);

/// Part sizes (non-increasing) if G is complete multipartite, i.e. if
/// non-adjacency is an equivalence relation; nullopt otherwise and for the
/// empty graph.
std::optional<Partition> recognize_complete_multipartite(const Graph& g);

/// 2^(n(n-1)/2).
std::uint64_t labeled_graph_count(int n);
/// Calls fn for every labeled graph of order n with edge mask in
/// [first, last). Throws CapExceededError for n > kExhaustiveOrderCap.
void for_each_graph(int n, std::uint64_t first, std::uint64_t last, const std::function<void(const Graph&)>& fn);
void for_each_graph(int n, const std::function<void(const Graph&)>& fn);

std::string vertex_set_to_string(VertexSet s);
VertexSet vertex_set_from(std::span<const int> vertices);

}  // namespace seidel
