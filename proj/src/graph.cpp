#include "extremal/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace extremal {

Graph::Graph(int n) : n_(n), adj_(static_cast<size_t>(n), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw std::invalid_argument("Graph: vertex count out of range");
  }
}

Graph Graph::from_edge_list(std::span<const std::pair<int, int>> pairs) {
  int n = 0;
  for (const auto& [u, v] : pairs) {
    if (u < 0 || v < 0) throw std::invalid_argument("edge list: negative vertex");
    if (u >= kMaxVertices || v >= kMaxVertices) {
      throw std::invalid_argument("edge list: vertex index >= 64");
    }
    if (u == v) throw std::invalid_argument("edge list: self-loop");
    n = std::max(n, std::max(u, v) + 1);
  }
  Graph g(n);
  for (const auto& [u, v] : pairs) {
    if (g.has_edge(u, v)) throw std::invalid_argument("edge list: duplicate edge");
    g.adj_[u] |= std::uint64_t{1} << v;
    g.adj_[v] |= std::uint64_t{1} << u;
  }
  return g;
}

long long Graph::edge_count() const {
  long long twice = 0;
  for (std::uint64_t row : adj_) twice += std::popcount(row);
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (adj_[u] >> v) & 1;
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

int Graph::max_degree() const {
  int d = 0;
  for (std::uint64_t row : adj_) d = std::max(d, std::popcount(row));
  return d;
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> degs;
  degs.reserve(adj_.size());
  for (std::uint64_t row : adj_) degs.push_back(std::popcount(row));
  std::sort(degs.begin(), degs.end());
  return degs;
}

Graph Graph::with_edge(int u, int v) const {
  if (u == v) throw std::invalid_argument("with_edge: self-loop");
  if (u < 0 || v < 0 || u >= kMaxVertices || v >= kMaxVertices) {
    throw std::invalid_argument("with_edge: vertex index out of range");
  }
  if (has_edge(u, v)) throw std::invalid_argument("with_edge: edge exists");
  Graph g = *this;
  const int need = std::max(u, v) + 1;
  if (need > g.n_) {
    g.adj_.resize(static_cast<size_t>(need), 0);
    g.n_ = need;
  }
  g.adj_[u] |= std::uint64_t{1} << v;
  g.adj_[v] |= std::uint64_t{1} << u;
  return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 1; v < n_; ++v) {
    std::uint64_t lower = adj_[v] & ((std::uint64_t{1} << v) - 1);
    while (lower) {
      const int u = std::countr_zero(lower);
      lower &= lower - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

std::uint64_t Graph::non_isolated_mask() const {
  std::uint64_t mask = 0;
  for (int v = 0; v < n_; ++v) {
    if (adj_[v]) mask |= std::uint64_t{1} << v;
  }
  return mask;
}

std::vector<Graph> Graph::components() const {
  std::vector<Graph> out;
  std::uint64_t todo = non_isolated_mask();
  while (todo) {
    const int start = std::countr_zero(todo);
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= adj_[v];
      }
      frontier = next & ~comp;
      comp |= next;
    }
    todo &= ~comp;

    // relabel component vertices to 0..k-1 in increasing original order
    int local[kMaxVertices];
    int k = 0;
    std::uint64_t c = comp;
    while (c) {
      const int v = std::countr_zero(c);
      c &= c - 1;
      local[v] = k++;
    }
    Graph sub(k);
    c = comp;
    while (c) {
      const int v = std::countr_zero(c);
      c &= c - 1;
      std::uint64_t nb = adj_[v] & comp;
      while (nb) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        sub.adj_[local[v]] |= std::uint64_t{1} << local[u];
      }
    }
    out.push_back(std::move(sub));
  }
  return out;
}

Graph disjoint_union(std::span<const Graph> gs) {
  int total = 0;
  for (const Graph& g : gs) total += g.vertex_count();
  if (total > Graph::kMaxVertices) {
    throw std::invalid_argument("disjoint_union: vertex budget exceeded");
  }
  Graph out(total);
  int base = 0;
  for (const Graph& g : gs) {
    for (int v = 0; v < g.vertex_count(); ++v) {
      out.adj_[base + v] = g.adj_[v] << base;
    }
    base += g.vertex_count();
  }
  return out;
}

}  // namespace extremal
