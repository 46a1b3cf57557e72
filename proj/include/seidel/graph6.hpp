#pragma once

#include <string>
#include <string_view>

#include "seidel/graph.hpp"

namespace seidel {

/// graph6 encoding (no header, no trailing newline).
std::string to_graph6(const Graph& g);

/// Decodes one graph6 line. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError on malformed input and
/// CapExceededError above kMaxGraphOrder vertices.
Graph from_graph6(std::string_view text);

}  // namespace seidel
