#include "kfactor/graph6.hpp"

#include <algorithm>
#include <sstream>

#include "kfactor/errors.hpp"

namespace kfactor {

namespace {

constexpr int kBias = 63;
constexpr int kMaxSmallN = 62;
constexpr long long kMaxMediumN = 258047;  // 2^18 - 1

int value_at(std::string_view line, std::size_t pos) {
  if (pos >= line.size()) throw parse_error("graph6: truncated input", line.size());
  unsigned char c = static_cast<unsigned char>(line[pos]);
  if (c < 63 || c > 126)
    throw parse_error("graph6: byte out of range 63..126", pos);
  return static_cast<int>(c) - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  if (line.empty()) throw parse_error("graph6: empty line", 0);

  std::size_t pos = 0;
  long long n;
  int first = value_at(line, pos);
  if (first < kMaxSmallN + 1) {
    n = first;
    pos = 1;
  } else {
    // '~' prefix: next three bytes hold n in big-endian 6-bit groups
    if (value_at(line, 1) == kMaxSmallN + 1)
      throw parse_error("graph6: vertex counts above 258047 are not supported", 1);
    n = 0;
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | value_at(line, i);
    if (n <= kMaxSmallN)
      throw parse_error("graph6: non-canonical long form for small n", 0);
    pos = 4;
  }

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  std::vector<Edge> edges;
  long long bit_index = 0;
  int col = 1, row = 0;
  for (long long b = 0; b < bytes; ++b) {
    int v = value_at(line, pos + static_cast<std::size_t>(b));
    for (int shift = 5; shift >= 0; --shift, ++bit_index) {
      int bit = (v >> shift) & 1;
      if (bit_index >= bits) {
        if (bit) throw parse_error("graph6: nonzero padding bit", pos + static_cast<std::size_t>(b));
        continue;
      }
      if (bit) edges.emplace_back(row, col);
      if (++row == col) {
        row = 0;
        ++col;
      }
    }
  }
  std::size_t expected = pos + static_cast<std::size_t>(bytes);
  if (line.size() > expected)
    throw parse_error("graph6: trailing bytes after adjacency data", expected);

  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
  const long long n = g.vertex_count();
  if (n > kMaxMediumN)
    throw param_error("encode_graph6: vertex counts above 258047 are not supported");

  std::string out;
  if (n <= kMaxSmallN) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kMaxSmallN + 1 + kBias));  // '~'
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }

  int acc = 0, filled = 0;
  for (Vertex col = 1; col < n; ++col) {
    for (Vertex row = 0; row < col; ++row) {
      acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    acc <<= (6 - filled);
    out.push_back(static_cast<char>(acc + kBias));
  }
  return out;
}

std::string emit_dot(const Graph& g,
                     const std::optional<std::pair<VertexSet, VertexSet>>& highlight) {
  std::vector<char> mark(g.vertex_count(), 0);
  if (highlight) {
    for (Vertex v : highlight->first) mark[v] = 1;   // S
    for (Vertex v : highlight->second) mark[v] = 2;  // T
  }
  std::ostringstream os;
  os << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    os << "  " << v;
    if (mark[v] == 1)
      os << " [style=filled, fillcolor=lightblue, group=S]";
    else if (mark[v] == 2)
      os << " [style=filled, fillcolor=lightsalmon, group=T]";
    os << ";\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace kfactor
