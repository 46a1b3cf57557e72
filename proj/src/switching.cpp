#include "seidel/switching.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <string>

#include "seidel/errors.hpp"

namespace seidel {

namespace {

// Stable colouring of the disjoint union G + H (G's vertices first).
std::vector<int> refine_colours(const Graph& g, const Graph& h, std::optional<std::pair<int, int>> pinned) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(2 * n));
  for (int v = 0; v < n; ++v) {
    colour[static_cast<std::size_t>(v)] = g.degree(v);
    colour[static_cast<std::size_t>(n + v)] = h.degree(v);
  }
  if (pinned) {
    colour[static_cast<std::size_t>(pinned->first)] = -1;
    colour[static_cast<std::size_t>(n + pinned->second)] = -1;
  }
  auto neighbours = [&](int x) { return x < n ? g.neighbours(x) : h.neighbours(x - n); };
  int classes = 0;
  while (true) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sigs(colour.size());
    for (int x = 0; x < 2 * n; ++x) {
      auto& sig = sigs[static_cast<std::size_t>(x)];
      sig.push_back(colour[static_cast<std::size_t>(x)]);
      const int offset = x < n ? 0 : n;
      for (VertexSet s = neighbours(x); s != 0; s &= s - 1) {
        sig.push_back(colour[static_cast<std::size_t>(offset + std::countr_zero(s))]);
      }
      std::sort(sig.begin() + 1, sig.end());
      ids.emplace(sig, 0);
    }
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    for (int x = 0; x < 2 * n; ++x) colour[static_cast<std::size_t>(x)] = ids[sigs[static_cast<std::size_t>(x)]];
    if (next == classes) break;
    classes = next;
  }
  return colour;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h, std::vector<int> colour, std::vector<int> order)
      : g_(g), h_(h), n_(g.order()), colour_(std::move(colour)), order_(std::move(order)),
        map_(static_cast<std::size_t>(n_), -1) {}

  std::optional<Permutation> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const int v = order_[depth];
    const int want = colour_[static_cast<std::size_t>(v)];
    for (int w = 0; w < n_; ++w) {
      if (((used_ >> w) & 1U) || colour_[static_cast<std::size_t>(n_ + w)] != want) continue;
      if (!consistent(v, w)) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_ |= VertexSet{1} << w;
      mapped_ |= VertexSet{1} << v;
      if (extend(depth + 1)) return true;
      mapped_ &= ~(VertexSet{1} << v);
      used_ &= ~(VertexSet{1} << w);
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  bool consistent(int v, int w) const {
    for (VertexSet s = mapped_; s != 0; s &= s - 1) {
      const int u = std::countr_zero(s);
      if (g_.adjacent(u, v) != h_.adjacent(map_[static_cast<std::size_t>(u)], w)) return false;
    }
    return true;
  }

  const Graph& g_;
  const Graph& h_;
  int n_;
  std::vector<int> colour_;
  std::vector<int> order_;
  Permutation map_;
  VertexSet used_ = 0;
  VertexSet mapped_ = 0;
};

VertexSet preimage(VertexSet s, const Permutation& perm) {
  VertexSet out = 0;
  for (std::size_t x = 0; x < perm.size(); ++x) {
    if ((s >> perm[x]) & 1U) out |= VertexSet{1} << x;
  }
  return out;
}

VertexSet smaller_side(VertexSet u, const Graph& g) {
  const VertexSet other = g.all_vertices() & ~u;
  return std::popcount(other) < std::popcount(u) ? other : u;
}

}  // namespace

std::optional<Permutation> graph_isomorphic(const Graph& g, const Graph& h, std::optional<std::pair<int, int>> pinned) {
  const int n = g.order();
  if (h.order() != n || g.edge_count() != h.edge_count()) return std::nullopt;
  if (pinned && (pinned->first < 0 || pinned->first >= n || pinned->second < 0 || pinned->second >= n)) {
    throw IndexError("pinned vertex outside graph");
  }
  std::vector<int> colour = refine_colours(g, h, pinned);
  std::vector<int> hist_g(colour.size() + 1, 0);
  std::vector<int> hist_h(colour.size() + 1, 0);
  for (int v = 0; v < n; ++v) {
    ++hist_g[static_cast<std::size_t>(colour[static_cast<std::size_t>(v)])];
    ++hist_h[static_cast<std::size_t>(colour[static_cast<std::size_t>(n + v)])];
  }
  if (hist_g != hist_h) return std::nullopt;

  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  if (pinned) order.push_back(pinned->first);
  for (int v = 0; v < n; ++v) {
    if (!pinned || v != pinned->first) order.push_back(v);
  }
  return IsoSearch(g, h, std::move(colour), std::move(order)).run();
}

Graph apply_witness(const Graph& g, const SwitchingWitness& w) { return relabel(seidel_switch(g, w.switch_set), w.perm); }

std::optional<SwitchingWitness> switching_equivalent(const Graph& g, const Graph& h, SwitchingMode mode) {
  const int n = g.order();
  if (n > kSwitchingEquivalenceCap || h.order() > kSwitchingEquivalenceCap) {
    throw CapExceededError("switching equivalence is capped at order " + std::to_string(kSwitchingEquivalenceCap));
  }
  if (h.order() != n) return std::nullopt;

  Permutation identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  if (n == 0) return SwitchingWitness{0, identity};

  const Graph g0 = normalize_at(g, 0);
  if (mode == SwitchingMode::label_preserving) {
    if (g0 != normalize_at(h, 0)) return std::nullopt;
    return SwitchingWitness{smaller_side(g.neighbours(0) ^ h.neighbours(0), g), identity};
  }

  for (int u = 0; u < n; ++u) {
    const Graph hu = normalize_at(h, u);
    auto perm = graph_isomorphic(g0, hu, std::make_pair(0, u));
    if (!perm) continue;
    // H = switch(relabel(G0, perm), N_H(u)) = relabel(switch(G, U), perm)
    // with U = N_G(0) xor perm^{-1}(N_H(u)).
    const VertexSet u_set = g.neighbours(0) ^ preimage(h.neighbours(u), *perm);
    return SwitchingWitness{smaller_side(u_set, g), std::move(*perm)};
  }
  return std::nullopt;
}

}  // namespace seidel
