#pragma once

#include <string>
#include <string_view>

#include "extremal/graph.hpp"

namespace extremal {

/// Decodes one graph6 string (no ">>graph6<<" header line) into a graph.
/// Throws std::invalid_argument on malformed headers, truncated or
/// overlong bit vectors, nonzero padding, or more than 64 vertices.
Graph parse_graph6(std::string_view text);

/// graph6 encoding of g; round-trips bit-exactly with parse_graph6.
std::string to_graph6(const Graph& g);

}  // namespace extremal
