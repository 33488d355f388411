#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace extremal {

/// Simple undirected graph on at most 64 labeled vertices, adjacency as
/// one 64-bit neighbor mask per vertex. Immutable by convention: mutating
/// operations return a new graph.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  explicit Graph(int n);

  static Graph from_edge_list(std::span<const std::pair<int, int>> pairs);

  int vertex_count() const { return n_; }
  long long edge_count() const;
  bool has_edge(int u, int v) const;
  std::uint64_t neighbors(int v) const { return adj_[v]; }
  int degree(int v) const;
  int max_degree() const;
  /// Degree sequence sorted ascending.
  std::vector<int> degree_sequence() const;

  /// Copy with edge {u, v} added; extends the vertex count to cover u and v.
  /// The edge must not already exist.
  Graph with_edge(int u, int v) const;

  std::vector<std::pair<int, int>> edges() const;

  /// Connected components of the non-isolated part, each relabeled to
  /// 0..k-1 preserving relative vertex order.
  std::vector<Graph> components() const;

  /// Mask of vertices with degree >= 1.
  std::uint64_t non_isolated_mask() const;

  bool operator==(const Graph&) const = default;

 private:
  friend Graph disjoint_union(std::span<const Graph> gs);

  int n_ = 0;
  std::vector<std::uint64_t> adj_;
};

/// Block-diagonal union; total vertex count must stay within 64.
Graph disjoint_union(std::span<const Graph> gs);

/// Certificate identifying the isomorphism class of a graph with its
/// isolated vertices removed. Equal bytes iff isomorphic after deleting
/// isolated vertices. The bytes are the graph6 encoding of the canonical
/// labeling, so certificates double as machine-readable graphs.
struct CanonicalForm {
  std::string bytes;
  auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonically labeled copy of g with isolated vertices removed:
/// components are individually relabeled to maximize their adjacency
/// bitstring (colex bit order) over refinement-respecting orderings,
/// then sorted by certificate.
Graph canonical_graph(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

}  // namespace extremal
