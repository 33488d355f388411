#include "extremal/cliques.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace extremal {

namespace {

// Cliques of any fixed size on <= 64 vertices stay below 2^63
// (max_t C(64,t) = C(64,32) ~ 1.8e18), so the recursion runs in
// native words and widens to Count at the boundary.

// Number of (need)-cliques whose vertices all lie in cand, where cand is
// already the common neighborhood of the vertices chosen so far. Vertices
// are consumed in ascending bit order to count each clique once.
std::uint64_t count_rec(const std::uint64_t* adj, std::uint64_t cand, int need) {
  if (need == 1) return static_cast<std::uint64_t>(std::popcount(cand));
  std::uint64_t total = 0;
  while (cand) {
    if (std::popcount(cand) < need) break;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    total += count_rec(adj, cand & adj[v], need - 1);
  }
  return total;
}

}  // namespace

Count count_kt(const Graph& g, int t) {
  if (t < 2) throw std::invalid_argument("count_kt: t must be >= 2");
  const int n = g.vertex_count();
  if (t > n) return 0;

  // relabel by non-increasing degree (ties by index) before descending
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&g](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::uint64_t adj[Graph::kMaxVertices] = {};
  for (int v = 0; v < n; ++v) {
    std::uint64_t nb = g.neighbors(v);
    while (nb) {
      const int u = std::countr_zero(nb);
      nb &= nb - 1;
      adj[pos[v]] |= std::uint64_t{1} << pos[u];
    }
  }

  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  return Count(static_cast<unsigned long>(count_rec(adj, all, t)));
}

CliqueProfile clique_profile(const Graph& g) {
  const int n = g.vertex_count();
  std::uint64_t by_size[Graph::kMaxVertices + 1] = {};

  // one pass over all cliques: each recursion step extends the current
  // clique by its lowest-numbered remaining common neighbor
  std::uint64_t adj[Graph::kMaxVertices] = {};
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  struct Frame {
    std::uint64_t cand;
    int size;
  };
  std::vector<Frame> stack;
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  stack.push_back({all, 0});
  while (!stack.empty()) {
    auto [cand, size] = stack.back();
    stack.pop_back();
    while (cand) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      ++by_size[size + 1];
      const std::uint64_t next = cand & adj[v];
      if (next) stack.push_back({next, size + 1});
    }
  }

  CliqueProfile profile;
  profile.total = 0;
  for (int t = 2; t <= n; ++t) {
    if (by_size[t] == 0) continue;
    Count c(static_cast<unsigned long>(by_size[t]));
    profile.total += c;
    profile.counts.emplace(t, std::move(c));
  }
  return profile;
}

VertexDiagnostics vertex_diagnostics(const Graph& g, int t) {
  if (t < 3) throw std::invalid_argument("vertex_diagnostics: t must be >= 3");
  const int n = g.vertex_count();
  std::uint64_t adj[Graph::kMaxVertices] = {};
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  VertexDiagnostics d;
  d.degree.resize(n);
  d.mu.resize(n);
  d.mu_t.resize(n);
  for (int v = 0; v < n; ++v) {
    const std::uint64_t nb = adj[v];
    const int deg = std::popcount(nb);
    d.degree[v] = deg;

    std::uint64_t inside = 0;
    std::uint64_t rest = nb;
    while (rest) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      inside += static_cast<std::uint64_t>(std::popcount(adj[u] & nb));
    }
    inside /= 2;
    d.mu[v] = binom_exact(deg, 2) - Count(static_cast<unsigned long>(inside));

    const std::uint64_t complete =
        (t - 1 == 1) ? static_cast<std::uint64_t>(deg)
                     : count_rec(adj, nb, t - 1);
    d.mu_t[v] = binom_exact(deg, t - 1) - Count(static_cast<unsigned long>(complete));
  }
  return d;
}

Count induced_k12_count(const Graph& g) {
  const int n = g.vertex_count();
  unsigned long found = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int c = b + 1; c < n; ++c) {
        const int edges = static_cast<int>(g.has_edge(a, b)) +
                          static_cast<int>(g.has_edge(a, c)) +
                          static_cast<int>(g.has_edge(b, c));
        if (edges == 2) ++found;
      }
    }
  }
  return Count(found);
}

bool has_clique(const Graph& g, int r) {
  if (r <= 1) return r <= 0 || g.vertex_count() >= 1;
  const int n = g.vertex_count();
  if (r > n) return false;
  std::uint64_t adj[Graph::kMaxVertices] = {};
  for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

  struct Frame {
    std::uint64_t cand;
    int need;
  };
  std::vector<Frame> stack;
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  stack.push_back({all, r});
  while (!stack.empty()) {
    auto [cand, need] = stack.back();
    stack.pop_back();
    if (need == 0) return true;
    while (std::popcount(cand) >= need) {
      const int v = std::countr_zero(cand);
      cand &= cand - 1;
      if (need == 1) return true;
      stack.push_back({cand & adj[v], need - 1});
    }
  }
  return false;
}

}  // namespace extremal
