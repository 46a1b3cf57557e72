#include "seidel/graph6.hpp"

#include <string>

#include "seidel/errors.hpp"

namespace seidel {

namespace {

constexpr int kBias = 63;

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
  } else {
    out += '~';
    out += static_cast<char>(((n >> 12) & 0x3F) + kBias);
    out += static_cast<char>(((n >> 6) & 0x3F) + kBias);
    out += static_cast<char>((n & 0x3F) + kBias);
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + kBias);
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled != 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
  return out;
}

Graph from_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("empty graph6 string");
  for (char ch : text) {
    if (ch < kBias || ch > 126) throw ParseError("graph6 byte out of range in \"" + std::string(text) + "\"");
  }

  auto value = [&](std::size_t i) { return static_cast<int>(text[i]) - kBias; };
  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = value(0);
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    throw CapExceededError("graph6 order beyond 258047 vertices");
  } else {
    if (text.size() < 4) throw ParseError("truncated graph6 size field");
    n = (static_cast<long>(value(1)) << 12) | (value(2) << 6) | value(3);
    pos = 4;
  }
  if (n > kMaxGraphOrder) throw CapExceededError("graph6 order " + std::to_string(n) + " above 64");

  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError("graph6 length mismatch: expected " + std::to_string(bytes) + " data bytes for order " +
                     std::to_string(n) + ", got " + std::to_string(text.size() - pos));
  }

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = value(pos + k / 6);
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0) {
    const int last = value(pos + bytes - 1);
    const int pad = 6 - static_cast<int>(bits % 6);
    if ((last & ((1 << pad) - 1)) != 0) throw ParseError("graph6 padding bits are not zero");
  }
  return g;
}

}  // namespace seidel
