#include "extremal/graph6.hpp"

#include <stdexcept>

namespace extremal {

namespace {

constexpr int kBias = 63;

int decode_char(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) {
    throw std::invalid_argument("graph6: byte outside printable range");
  }
  return v;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("graph6: empty input");

  size_t pos = 0;
  long n;
  const int first = decode_char(text[0]);
  if (first < 63) {
    n = first;
    pos = 1;
  } else {
    // 126 prefix: 18-bit size in the next three bytes (the 8-byte form
    // would exceed the 64-vertex cap anyway)
    if (text.size() < 4) throw std::invalid_argument("graph6: truncated header");
    if (decode_char(text[1]) == 63) {
      throw std::invalid_argument("graph6: vertex count above 64 unsupported");
    }
    n = (static_cast<long>(decode_char(text[1])) << 12) |
        (static_cast<long>(decode_char(text[2])) << 6) |
        static_cast<long>(decode_char(text[3]));
    if (n < 63) throw std::invalid_argument("graph6: non-canonical size header");
    pos = 4;
  }
  if (n > Graph::kMaxVertices) {
    throw std::invalid_argument("graph6: more than 64 vertices");
  }

  const long bits = n * (n - 1) / 2;
  const size_t body = static_cast<size_t>((bits + 5) / 6);
  if (text.size() - pos < body) {
    throw std::invalid_argument("graph6: truncated bit vector");
  }
  if (text.size() - pos > body) {
    throw std::invalid_argument("graph6: trailing bytes");
  }

  std::vector<std::pair<int, int>> edges;
  long bit = 0;
  for (size_t i = 0; i < body; ++i) {
    const int group = decode_char(text[pos + i]);
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (group >> b) & 1;
      if (bit >= bits) {
        if (set) throw std::invalid_argument("graph6: nonzero padding bits");
        continue;
      }
      if (set) {
        // colex position -> pair (u, v), u < v
        long v = 1;
        while ((v + 1) * v / 2 <= bit) ++v;
        const long u = bit - v * (v - 1) / 2;
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
      }
    }
  }
  Graph g = Graph::from_edge_list(edges);
  // from_edge_list sizes to the largest endpoint; restore trailing
  // isolated vertices
  const int pad = static_cast<int>(n) - g.vertex_count();
  if (pad > 0) {
    std::vector<Graph> parts;
    parts.push_back(std::move(g));
    parts.emplace_back(pad);
    return disjoint_union(parts);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const long n = g.vertex_count();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  int group = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      group = (group << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(group + kBias));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(group + kBias));
  }
  return out;
}

}  // namespace extremal
