#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "extremal/graph.hpp"
#include "extremal/graph6.hpp"

namespace extremal {

namespace {

// Color refinement to a fixpoint: start from degrees (largest first),
// then repeatedly split classes by the multiset of neighbor colors.
// The resulting ordered partition depends only on the isomorphism class.
std::vector<std::vector<int>> refine(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n, 0);
  {
    std::vector<int> degs(n);
    for (int v = 0; v < n; ++v) degs[v] = g.degree(v);
    std::vector<int> distinct = degs;
    std::sort(distinct.begin(), distinct.end(), std::greater<>());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), degs[v], std::greater<>()) -
          distinct.begin());
    }
  }

  int ncolors = 1 + *std::max_element(color.begin(), color.end());
  for (;;) {
    std::vector<std::vector<int>> key(n);
    for (int v = 0; v < n; ++v) {
      key[v].push_back(color[v]);
      std::uint64_t nb = g.neighbors(v);
      std::vector<int> nc;
      while (nb) {
        const int u = std::countr_zero(nb);
        nb &= nb - 1;
        nc.push_back(color[u]);
      }
      std::sort(nc.begin(), nc.end());
      key[v].insert(key[v].end(), nc.begin(), nc.end());
    }
    std::vector<std::vector<int>> distinct = key;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), key[v]) - distinct.begin());
    }
    const int next = static_cast<int>(distinct.size());
    if (next == ncolors) break;
    ncolors = next;
  }

  std::vector<std::vector<int>> cells(ncolors);
  for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
  return cells;
}

// Backtracking over orderings that list cell 0 first, then cell 1, etc.,
// maximizing the adjacency bitstring read column by column: placing v at
// position p contributes the p bits toward positions 0..p-1, earlier bit
// more significant. Maintains the invariant that the current prefix ties
// the best known prefix; a strictly larger column overwrites the best tail.
struct Canonicalizer {
  const Graph& g;
  int n;
  std::vector<int> cell_of_pos;
  std::vector<std::vector<int>> cells;
  std::vector<std::uint64_t> cols;
  std::vector<int> order;
  std::uint64_t used = 0;
  std::vector<std::uint64_t> best_cols;
  std::vector<int> best_order;
  int best_len = 0;

  explicit Canonicalizer(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        cells(refine(graph)),
        cols(n, 0),
        order(n, -1),
        best_cols(n, 0) {
    cell_of_pos.reserve(n);
    for (size_t c = 0; c < cells.size(); ++c) {
      cell_of_pos.insert(cell_of_pos.end(), cells[c].size(), static_cast<int>(c));
    }
  }

  void search(int p) {
    if (p == n) {
      best_order = order;
      best_len = n;
      return;
    }
    std::vector<std::pair<std::uint64_t, int>> cand;
    for (int v : cells[cell_of_pos[p]]) {
      if (!((used >> v) & 1)) cand.emplace_back(cols[v], v);
    }
    std::sort(cand.rbegin(), cand.rend());

    int tried[Graph::kMaxVertices];
    int ntried = 0;
    for (const auto& [col, v] : cand) {
      if (best_len > p) {
        if (col < best_cols[p]) break;  // descending order: rest are worse
        if (col > best_cols[p]) {
          best_cols[p] = col;
          best_len = p + 1;
        }
      } else {
        best_cols[p] = col;
        best_len = p + 1;
      }

      // skip v if swapping it with an already-expanded sibling is an
      // automorphism (both unplaced, so the prefix is fixed)
      bool twin = false;
      for (int i = 0; i < ntried; ++i) {
        const int u = tried[i];
        if (cols[u] != col) continue;
        const std::uint64_t mask =
            ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
        if ((g.neighbors(u) & mask) == (g.neighbors(v) & mask)) {
          twin = true;
          break;
        }
      }
      if (twin) continue;

      order[p] = v;
      used |= std::uint64_t{1} << v;
      const std::uint64_t nb = g.neighbors(v);
      for (int w = 0; w < n; ++w) {
        if (!((used >> w) & 1)) cols[w] = (cols[w] << 1) | ((nb >> w) & 1);
      }
      search(p + 1);
      for (int w = 0; w < n; ++w) {
        if (!((used >> w) & 1)) cols[w] >>= 1;
      }
      used &= ~(std::uint64_t{1} << v);
      tried[ntried++] = v;
    }
  }

  Graph run() {
    search(0);
    std::vector<std::pair<int, int>> relabeled;
    std::vector<int> pos(n);
    for (int p = 0; p < n; ++p) pos[best_order[p]] = p;
    for (const auto& [u, v] : g.edges()) {
      const int a = std::min(pos[u], pos[v]);
      const int b = std::max(pos[u], pos[v]);
      relabeled.emplace_back(a, b);
    }
    return Graph::from_edge_list(relabeled);
  }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
  std::vector<std::pair<std::string, Graph>> parts;
  for (const Graph& comp : g.components()) {
    Graph canon = Canonicalizer(comp).run();
    std::string cert = to_graph6(canon);
    parts.emplace_back(std::move(cert), std::move(canon));
  }
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> ordered;
  ordered.reserve(parts.size());
  for (auto& [cert, comp] : parts) ordered.push_back(std::move(comp));
  return disjoint_union(ordered);
}

CanonicalForm canonical_form(const Graph& g) {
  return CanonicalForm{to_graph6(canonical_graph(g))};
}

}  // namespace extremal
