#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "seidel/partition.hpp"
#include "seidel/switching.hpp"

namespace seidel {

struct SurveyPartitionRow {
  Partition partition;
  /// Labeled graphs of order n with the same Seidel charpoly as K_P.
  std::uint64_t cospectral_graphs = 0;
  /// Switching classes (switching plus relabeling) those graphs fall into.
  std::size_t cospectral_classes = 0;
  /// Graphs among them outside the class of K_Q for every Q in the family
  /// with the same charpoly.
  std::uint64_t outside_family = 0;
  /// A witness from switching_equivalent was replayed for one representative
  /// per class and matched.
  bool witnesses_replayed = false;
};

struct SurveyReport {
  int order = 0;
  std::uint64_t graphs_scanned = 0;
  std::size_t switching_classes = 0;
  std::size_t distinct_charpolys = 0;
  std::vector<SurveyPartitionRow> rows;
  /// Pairs of distinct partitions with the same k >= 3 checked for landing
  /// in different switching classes.
  std::size_t same_k_pairs_checked = 0;
  std::vector<std::string> violations;
  double seconds = 0.0;

  bool ok() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Enumerates all 2^(n(n-1)/2) labeled graphs of order n, partitions them
/// into switching classes (union-find over single-vertex switches and
/// adjacent transpositions), computes every Seidel charpoly, and checks that
/// each graph cospectral with a complete multipartite graph is switching
/// equivalent to one, and that distinct k-partitions (k >= 3) give distinct
/// classes. Representatives are cross-checked with switching_equivalent.
/// Throws CapExceededError for n > kExhaustiveOrderCap.
SurveyReport exhaustive_switching_survey(int n, unsigned jobs = 1);

}  // namespace seidel
