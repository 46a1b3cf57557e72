#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "seidel/partition.hpp"
#include "seidel/poly.hpp"

namespace seidel {

/// Largest order accepted by the family searches.
inline constexpr long kFamilySearchCap = 30;

/// Partitions sharing one exact Seidel characteristic polynomial.
struct CospectralClass {
  IntPolynomial charpoly;
  /// Sorted lexicographically (as non-increasing sequences), never empty.
  std::vector<Partition> partitions;
};

/// Every partition of n into k parts whose degree-k residual equals
/// `residual`. sigma_1 and sigma_3..sigma_k are read off the coefficients by
/// back-substitution; sigma_2 is invisible to the residual, so each integer
/// candidate between its extremes over partitions of n into k parts is tried
/// and kept when the resulting polynomial splits into positive integer roots.
/// Every returned partition reproduces `residual` exactly. Empty when the
/// coefficients are inconsistent with any partition.
std::vector<Partition> recover_partitions(const IntPolynomial& residual, long k, long n);

/// Groups all partitions of n (optionally with exactly k parts) by their
/// full Seidel charpoly. Classes come ordered by their first partition.
/// `jobs` worker threads; the result does not depend on it. Throws
/// CapExceededError above kFamilySearchCap.
std::vector<CospectralClass> cospectral_classes(long n, std::optional<long> k = std::nullopt, unsigned jobs = 1);

enum class ViolationKind {
  shared_part_size,  // cospectral k-partitions (k >= 3) that share a part size but differ
  cross_k_collision  // cospectral partitions with different k, not both k <= 2
};

struct Violation {
  ViolationKind kind;
  Partition first;
  Partition second;
};

enum class FamilyVerdict {
  singleton,            // unique charpoly among partitions of n
  bipartite_switching,  // k <= 2: shares its class, but every member switches to the null graph
  not_determined        // k >= 3 with a cospectral mate in the family
};

const char* verdict_name(FamilyVerdict v);
const char* violation_name(ViolationKind v);

struct DeterminationReport {
  long order = 0;
  std::optional<long> parts;
  std::size_t partitions_scanned = 0;
  std::size_t pairs_checked = 0;
  std::vector<CospectralClass> classes;
  std::vector<Violation> violations;
  std::vector<std::pair<Partition, FamilyVerdict>> verdicts;
  double seconds = 0.0;

  bool ok() const { return violations.empty(); }
  nlohmann::json to_json() const;
};

/// Scans the classes of partitions of n: every cospectral pair of distinct
/// k-partitions with k >= 3 must have disjoint part-size sets, and partitions
/// with different k may only collide when both have k <= 2. Anything else is
/// recorded as a violation.
DeterminationReport verify_shared_part_property(long n, std::optional<long> k = std::nullopt, unsigned jobs = 1);

enum class ForcingRule {
  bipartite,             // k <= 2
  repeated_part,         // some size occurs at least three times
  trailing_one_one,      // (..., 1, 1) with k >= 3
  trailing_two_two_one,  // (..., 2, 2, 1) with k >= 3
  none
};

const char* forcing_rule_name(ForcingRule r);

struct ForcedPartVerdict {
  ForcingRule rule = ForcingRule::none;
  /// The part size every cospectral mate is forced to contain.
  std::optional<long> forced_size;
  /// 2 * forced_size - 1, a root of the full charpoly.
  std::optional<long> forced_eigenvalue;
  int forced_eigenvalue_multiplicity = 0;
  /// All partitions with the same k whose residual matches.
  std::vector<Partition> candidates;
  bool determined = false;
};

/// Applies the eigenvalue-forcing argument on exact data: locates the
/// eigenvalue 2n_l - 1 pinned by interlacing (with multiplicity at least
/// r_l - 1 for a size repeated r_l >= 3 times), then checks that the
/// recovered candidates collapse to P itself.
ForcedPartVerdict check_forced_part_sizes(const Partition& p);

/// True when no other partition of the same order has the same Seidel
/// charpoly.
bool s_determined_in_family(const Partition& p);

}  // namespace seidel
