#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace seidel {

/// A distinct part size together with how many parts have that size.
struct PartGroup {
  long size;
  long multiplicity;
  friend bool operator==(const PartGroup&, const PartGroup&) = default;
};

/// Multiset of part sizes n_1 >= ... >= n_k >= 1 of a complete multipartite
/// graph. Always stored sorted non-increasing.
class Partition {
 public:
  /// Sorts the parts. Throws EmptyPartitionError for no parts and
  /// InvalidPartitionError for a part below 1.
  explicit Partition(std::vector<long> parts);

  /// Accepts "3,2,1" and the grouped form "2*3,1*2" (multiplicity*size);
  /// both kinds of token may be mixed. Throws ParseError.
  static Partition parse(std::string_view text);
  static Partition from_groups(std::span<const PartGroup> groups);

  std::span<const long> parts() const { return parts_; }
  long part(std::size_t i) const { return parts_[i]; }
  /// Number of vertices, the sum of the parts.
  long order() const { return order_; }
  /// Number of parts.
  std::size_t size() const { return parts_.size(); }

  /// Distinct sizes in decreasing order with their multiplicities.
  std::vector<PartGroup> grouped() const;
  std::vector<long> distinct_sizes() const;
  long multiplicity_of(long size) const;
  bool contains(long size) const { return multiplicity_of(size) > 0; }

  /// "3,2,1"
  std::string to_string() const;
  /// "2*3,1*2"; sizes with multiplicity one are written bare.
  std::string to_grouped_string() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<long> parts_;
  long order_ = 0;
};

/// All partitions of n (optionally into exactly k parts), in reverse
/// lexicographic order: (n), (n-1,1), (n-2,2), (n-2,1,1), ...
std::vector<Partition> partitions_of(long n, std::optional<long> parts = std::nullopt);

}  // namespace seidel
