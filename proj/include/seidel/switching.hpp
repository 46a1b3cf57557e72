#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "seidel/graph.hpp"

namespace seidel {

/// Vertex permutation `perm` with H = relabel(G, perm), i.e. G's vertex v
/// maps to H's vertex perm[v].
using Permutation = std::vector<int>;

/// Backtracking isomorphism search over candidates refined by colour
/// refinement. With `pinned = (a, b)`, only maps with a -> b are considered.
/// Returns nullopt when no isomorphism exists. Prefers the lexicographically
/// smallest map, so an automorphic pair yields the identity.
std::optional<Permutation> graph_isomorphic(const Graph& g, const Graph& h,
                                            std::optional<std::pair<int, int>> pinned = std::nullopt);

/// Replaying a witness: relabel(seidel_switch(G, switch_set), perm) == H.
struct SwitchingWitness {
  VertexSet switch_set = 0;
  Permutation perm;
};

Graph apply_witness(const Graph& g, const SwitchingWitness& w);

enum class SwitchingMode {
  with_relabeling,  // some switch followed by some isomorphism
  label_preserving  // switching only, vertex labels fixed
};

/// Largest order accepted by switching_equivalent.
inline constexpr int kSwitchingEquivalenceCap = 10;

/// Decides switching equivalence by normalising both graphs at a base vertex
/// (switching there isolates it) and testing pinned isomorphism of the
/// normalised graphs, base 0 of G against every base u of H. Graphs of
/// different order are never equivalent. Throws CapExceededError above
/// kSwitchingEquivalenceCap.
std::optional<SwitchingWitness> switching_equivalent(const Graph& g, const Graph& h,
                                                     SwitchingMode mode = SwitchingMode::with_relabeling);

}  // namespace seidel
