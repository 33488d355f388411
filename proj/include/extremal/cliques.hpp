#pragma once

#include <map>
#include <vector>

#include "extremal/binom.hpp"
#include "extremal/graph.hpp"

namespace extremal {

/// Exact number of t-vertex complete subgraphs, by recursive intersection
/// of neighborhood bitsets over a fixed vertex order (non-increasing
/// degree, ties by index). Requires t >= 2.
Count count_kt(const Graph& g, int t);

/// counts[t] for t = 2 .. clique number, plus their sum (the total number
/// of complete subgraphs of order >= 2).
struct CliqueProfile {
  std::map<int, Count> counts;
  Count total;
};

CliqueProfile clique_profile(const Graph& g);

/// Per-vertex neighborhood defects: mu[v] counts the non-edges inside
/// N(v); mu_t[v] counts the (t-1)-subsets of N(v) inducing something
/// short of a complete graph. mu equals mu_t at t=3.
struct VertexDiagnostics {
  std::vector<int> degree;
  std::vector<Count> mu;
  std::vector<Count> mu_t;
};

VertexDiagnostics vertex_diagnostics(const Graph& g, int t);

/// Number of vertex triples inducing exactly two edges (a 2-edge path).
Count induced_k12_count(const Graph& g);

/// Whether g contains a complete subgraph on r vertices (early exit).
bool has_clique(const Graph& g, int r);

}  // namespace extremal
