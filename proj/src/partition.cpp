#include "seidel/partition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <utility>

#include "seidel/errors.hpp"

namespace seidel {

namespace {

constexpr long kMaxParsedParts = 1'000'000;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

long parse_positive(std::string_view token, std::string_view whole) {
  token = trim(token);
  long value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (token.empty() || ec != std::errc{} || ptr != last) {
    throw ParseError("bad partition \"" + std::string(whole) + "\": \"" + std::string(token) + "\" is not an integer");
  }
  if (value < 1) {
    throw ParseError("bad partition \"" + std::string(whole) + "\": parts must be >= 1");
  }
  return value;
}

}  // namespace

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw EmptyPartitionError("a partition needs at least one part");
  for (long p : parts_) {
    if (p < 1) throw InvalidPartitionError("partition parts must be >= 1, got " + std::to_string(p));
    order_ += p;
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (text.empty()) throw ParseError("empty partition string");
  std::vector<long> parts;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = text.substr(0, comma);
    const auto star = token.find('*');
    if (star == std::string_view::npos) {
      parts.push_back(parse_positive(token, whole));
    } else {
      const long mult = parse_positive(token.substr(0, star), whole);
      const long size = parse_positive(token.substr(star + 1), whole);
      if (mult > kMaxParsedParts - static_cast<long>(parts.size())) throw ParseError("partition has too many parts");
      parts.insert(parts.end(), static_cast<std::size_t>(mult), size);
    }
    if (static_cast<long>(parts.size()) > kMaxParsedParts) throw ParseError("partition has too many parts");
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

Partition Partition::from_groups(std::span<const PartGroup> groups) {
  std::vector<long> parts;
  for (const auto& g : groups) {
    if (g.multiplicity < 1) throw InvalidPartitionError("group multiplicity must be >= 1");
    parts.insert(parts.end(), static_cast<std::size_t>(g.multiplicity), g.size);
  }
  return Partition(std::move(parts));
}

std::vector<PartGroup> Partition::grouped() const {
  std::vector<PartGroup> out;
  for (long p : parts_) {
    if (!out.empty() && out.back().size == p) {
      ++out.back().multiplicity;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

std::vector<long> Partition::distinct_sizes() const {
  std::vector<long> out;
  for (const auto& g : grouped()) out.push_back(g.size);
  return out;
}

long Partition::multiplicity_of(long size) const {
  return static_cast<long>(std::count(parts_.begin(), parts_.end(), size));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i != 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Partition::to_grouped_string() const {
  std::string out;
  for (const auto& g : grouped()) {
    if (!out.empty()) out += ',';
    if (g.multiplicity != 1) out += std::to_string(g.multiplicity) + '*';
    out += std::to_string(g.size);
  }
  return out;
}

std::vector<Partition> partitions_of(long n, std::optional<long> parts) {
  std::vector<Partition> out;
  if (n < 1) return out;
  if (parts && (*parts < 1 || *parts > n)) return out;
  std::vector<long> cur;
  // Largest-first recursive descent: next part at most `cap`.
  std::function<void(long, long)> descend = [&](long remaining, long cap) {
    if (remaining == 0) {
      if (!parts || static_cast<long>(cur.size()) == *parts) out.emplace_back(cur);
      return;
    }
    if (parts) {
      const long slots = *parts - static_cast<long>(cur.size());
      // Need slots parts each in [1, cap] summing to remaining.
      if (slots <= 0 || remaining < slots || remaining > slots * cap) return;
    }
    for (long p = std::min(remaining, cap); p >= 1; --p) {
      cur.push_back(p);
      descend(remaining - p, p);
      cur.pop_back();
    }
  };
  descend(n, n);
  return out;
}

}  // namespace seidel
