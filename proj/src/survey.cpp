#include "seidel/survey.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "seidel/errors.hpp"
#include "seidel/graph.hpp"

namespace seidel {

namespace {

using Mask = std::uint32_t;
using Charpoly = std::vector<std::int64_t>;

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), Mask{0}); }

  Mask find(Mask x) {
    Mask root = x;
    while (parent_[root] != root) root = parent_[root];
    while (parent_[x] != root) {
      const Mask next = parent_[x];
      parent_[x] = root;
      x = next;
    }
    return root;
  }

  void unite(Mask a, Mask b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;  // smallest mask is the root
  }

  void flatten() {
    for (std::size_t i = 0; i < parent_.size(); ++i) find(static_cast<Mask>(i));
  }

  Mask root(Mask x) const { return parent_[x]; }

 private:
  std::vector<Mask> parent_;
};

struct EdgeTables {
  int n = 0;
  int bits = 0;
  std::vector<Mask> incident;                // per vertex
  std::vector<std::vector<int>> transposed;  // per adjacent swap, image of each bit
  std::vector<std::pair<int, int>> ends;     // per bit
};

EdgeTables build_tables(int n) {
  EdgeTables t;
  t.n = n;
  t.bits = n * (n - 1) / 2;
  t.ends.resize(static_cast<std::size_t>(t.bits));
  t.incident.assign(static_cast<std::size_t>(n), 0);
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      const auto e = edge_index(i, j);
      t.ends[e] = {i, j};
      t.incident[static_cast<std::size_t>(i)] |= Mask{1} << e;
      t.incident[static_cast<std::size_t>(j)] |= Mask{1} << e;
    }
  }
  for (int v = 0; v + 1 < n; ++v) {
    std::vector<int> image(static_cast<std::size_t>(t.bits));
    auto swap_vertex = [&](int x) { return x == v ? v + 1 : (x == v + 1 ? v : x); };
    for (int e = 0; e < t.bits; ++e) {
      const auto [i, j] = t.ends[static_cast<std::size_t>(e)];
      image[static_cast<std::size_t>(e)] = static_cast<int>(edge_index(swap_vertex(i), swap_vertex(j)));
    }
    t.transposed.push_back(std::move(image));
  }
  return t;
}

Mask apply_transposition(const std::vector<int>& image, Mask m) {
  Mask out = 0;
  while (m != 0) {
    const int e = std::countr_zero(m);
    out |= Mask{1} << image[static_cast<std::size_t>(e)];
    m &= m - 1;
  }
  return out;
}

Charpoly charpoly_of_mask(const EdgeTables& t, Mask m) {
  const auto un = static_cast<std::size_t>(t.n);
  std::vector<std::int8_t> signs(un * un, 1);
  for (std::size_t i = 0; i < un; ++i) signs[i * un + i] = 0;
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    const auto [i, j] = t.ends[static_cast<std::size_t>(std::countr_zero(rest))];
    signs[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)] = -1;
    signs[static_cast<std::size_t>(j) * un + static_cast<std::size_t>(i)] = -1;
  }
  return seidel_charpoly_small(signs, t.n);
}

struct ShardResult {
  std::map<Charpoly, std::uint64_t> charpoly_counts;
  // Per family charpoly: matching graphs, grouped by switching class root.
  std::map<std::size_t, std::map<Mask, std::uint64_t>> family_hits;
  // Switching class root -> its charpoly, for the invariance check.
  std::map<Mask, Charpoly> class_charpoly;
  std::vector<std::string> violations;
};

}  // namespace

SurveyReport exhaustive_switching_survey(int n, unsigned jobs) {
  if (n < 1) throw InvalidPartitionError("order must be positive");
  if (n > kExhaustiveOrderCap) {
    throw CapExceededError("exhaustive survey capped at order " + std::to_string(kExhaustiveOrderCap));
  }
  const auto start = std::chrono::steady_clock::now();
  SurveyReport report;
  report.order = n;
  const EdgeTables tables = build_tables(n);
  const std::uint64_t total = labeled_graph_count(n);
  report.graphs_scanned = total;

  UnionFind classes(static_cast<std::size_t>(total));
  for (std::uint64_t m = 0; m < total; ++m) {
    const auto mask = static_cast<Mask>(m);
    for (int v = 0; v < n; ++v) classes.unite(mask, mask ^ tables.incident[static_cast<std::size_t>(v)]);
    for (const auto& image : tables.transposed) classes.unite(mask, apply_transposition(image, mask));
  }
  classes.flatten();

  // Family charpolys, each with the partitions that produce it.
  const auto partitions = partitions_of(n);
  std::map<Charpoly, std::size_t> family_index;
  std::vector<std::vector<Partition>> family_members;
  std::vector<Mask> partition_mask;
  for (const auto& p : partitions) {
    const Graph g = complete_multipartite(p);
    const Charpoly c = seidel_charpoly_small(seidel_matrix(g));
    auto [it, fresh] = family_index.emplace(c, family_members.size());
    if (fresh) family_members.emplace_back();
    family_members[it->second].push_back(p);
    partition_mask.push_back(static_cast<Mask>(g.edge_mask()));
  }

  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(jobs, 64));
  std::vector<ShardResult> shards(workers);
  auto scan = [&](std::size_t w) {
    ShardResult& out = shards[w];
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    for (std::uint64_t m = lo; m < hi; ++m) {
      const auto mask = static_cast<Mask>(m);
      Charpoly c = charpoly_of_mask(tables, mask);
      const Mask root = classes.root(mask);
      if (auto it = out.class_charpoly.find(root); it == out.class_charpoly.end()) {
        out.class_charpoly.emplace(root, c);
      } else if (it->second != c) {
        out.violations.push_back("switching class of mask " + std::to_string(root) + " is not cospectral");
      }
      if (auto f = family_index.find(c); f != family_index.end()) ++out.family_hits[f->second][root];
      ++out.charpoly_counts[std::move(c)];
    }
  };
  if (workers == 1) {
    scan(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(scan, w);
    for (auto& t : pool) t.join();
  }

  std::map<Charpoly, std::uint64_t> charpoly_counts;
  std::map<std::size_t, std::map<Mask, std::uint64_t>> family_hits;
  std::map<Mask, Charpoly> class_charpoly;
  for (auto& s : shards) {
    for (auto& [c, count] : s.charpoly_counts) charpoly_counts[c] += count;
    for (auto& [f, roots] : s.family_hits) {
      for (auto& [root, count] : roots) family_hits[f][root] += count;
    }
    for (auto& [root, c] : s.class_charpoly) {
      auto [it, fresh] = class_charpoly.emplace(root, c);
      if (!fresh && it->second != c) {
        report.violations.push_back("switching class of mask " + std::to_string(root) + " is not cospectral");
      }
    }
    report.violations.insert(report.violations.end(), s.violations.begin(), s.violations.end());
  }
  report.switching_classes = class_charpoly.size();
  report.distinct_charpolys = charpoly_counts.size();

  for (std::size_t pi = 0; pi < partitions.size(); ++pi) {
    const Partition& p = partitions[pi];
    const Graph kp = complete_multipartite(p);
    const std::size_t f = family_index.at(seidel_charpoly_small(seidel_matrix(kp)));
    std::set<Mask> family_roots;
    for (const auto& q : family_members[f]) {
      family_roots.insert(classes.root(partition_mask[static_cast<std::size_t>(
          std::find(partitions.begin(), partitions.end(), q) - partitions.begin())]));
    }
    SurveyPartitionRow row{p};
    row.witnesses_replayed = true;
    for (const auto& [root, count] : family_hits[f]) {
      row.cospectral_graphs += count;
      ++row.cospectral_classes;
      if (!family_roots.contains(root)) {
        row.outside_family += count;
        report.violations.push_back("graph with mask " + std::to_string(root) + " is cospectral with K_{" +
                                    p.to_string() + "} but not switching equivalent to a family member");
        continue;
      }
      const Graph rep = Graph::from_edge_mask(n, root);
      bool matched = false;
      for (const auto& q : family_members[f]) {
        const Graph kq = complete_multipartite(q);
        const auto w = switching_equivalent(rep, kq);
        if (w && apply_witness(rep, *w) == kq) {
          matched = true;
          break;
        }
      }
      if (!matched) {
        row.witnesses_replayed = false;
        report.violations.push_back("no replayable witness for mask " + std::to_string(root) + " against K_{" +
                                    p.to_string() + "}");
      }
    }
    if (row.cospectral_graphs == 0) report.violations.push_back("K_{" + p.to_string() + "} was not enumerated");
    report.rows.push_back(std::move(row));
  }

  for (std::size_t a = 0; a < partitions.size(); ++a) {
    for (std::size_t b = a + 1; b < partitions.size(); ++b) {
      const Partition& p = partitions[a];
      const Partition& q = partitions[b];
      if (p.size() != q.size() || p.size() < 3) continue;
      ++report.same_k_pairs_checked;
      const bool same_class = classes.root(partition_mask[a]) == classes.root(partition_mask[b]);
      const bool oracle = switching_equivalent(complete_multipartite(p), complete_multipartite(q)).has_value();
      if (same_class != oracle) {
        report.violations.push_back("union-find and switching_equivalent disagree on K_{" + p.to_string() +
                                    "} and K_{" + q.to_string() + "}");
      }
      if (same_class || oracle) {
        report.violations.push_back("K_{" + p.to_string() + "} and K_{" + q.to_string() + "} are switching equivalent");
      }
    }
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

nlohmann::json SurveyReport::to_json() const {
  using nlohmann::json;
  json j;
  j["n"] = std::to_string(order);
  j["graphs_scanned"] = std::to_string(graphs_scanned);
  j["switching_classes"] = std::to_string(switching_classes);
  j["distinct_charpolys"] = std::to_string(distinct_charpolys);
  json rows_json = json::array();
  for (const auto& r : rows) {
    rows_json.push_back({{"partition", r.partition.to_string()},
                         {"cospectral_graphs", std::to_string(r.cospectral_graphs)},
                         {"switching_classes", std::to_string(r.cospectral_classes)},
                         {"outside_family", std::to_string(r.outside_family)},
                         {"witnesses_replayed", r.witnesses_replayed}});
  }
  j["partitions"] = rows_json;
  j["same_k_pairs_checked"] = std::to_string(same_k_pairs_checked);
  j["violations"] = violations;
  j["ok"] = ok();
  return j;
}

}  // namespace seidel
