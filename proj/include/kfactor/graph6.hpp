#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "kfactor/graph.hpp"

namespace kfactor {

/// Decodes one headerless graph6 line: the N(n) size prefix (single byte
/// n+63 for n <= 62, '~' plus three bytes for n <= 258047), then the upper
/// triangle of the adjacency matrix in column order, six bits per byte,
/// each byte offset by 63. Rejects out-of-range bytes, truncated input,
/// trailing bytes and nonzero padding bits, all with byte offsets.
Graph parse_graph6(std::string_view line);

/// Canonical graph6 encoding; parse_graph6(encode_graph6(g)) == g and
/// encode_graph6(parse_graph6(s)) == s bit-exactly.
std::string encode_graph6(const Graph& g);

/// Deterministic DOT output, vertices in id order. The optional highlight
/// pair marks an (S,T) witness with distinct fill attributes.
std::string emit_dot(const Graph& g,
                     const std::optional<std::pair<VertexSet, VertexSet>>& highlight = {});

}  // namespace kfactor
