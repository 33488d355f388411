#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "extremal/graph.hpp"
#include "extremal/graph6.hpp"
#include "oracles.hpp"

using namespace extremal;

namespace {

Graph make(std::vector<std::pair<int, int>> edges) { return Graph::from_edge_list(edges); }

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(edges);
}

}  // namespace

TEST_CASE("from_edge_list constructs and validates") {
  const Graph empty = make({});
  CHECK(empty.vertex_count() == 0);
  CHECK(empty.edge_count() == 0);

  const Graph tri = make({{0, 1}, {1, 2}, {0, 2}});
  CHECK(tri.vertex_count() == 3);
  CHECK(tri.edge_count() == 3);
  CHECK(tri.degree(0) == 2);
  CHECK(tri.degree(1) == 2);
  CHECK(tri.degree(2) == 2);
  CHECK(tri.has_edge(0, 2));
  CHECK(tri.has_edge(2, 0));

  CHECK_THROWS_AS(make({{0, 1}, {0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make({{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(make({{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(make({{0, 64}}), std::invalid_argument);
}

TEST_CASE("with_edge extends the vertex range and rejects duplicates") {
  const Graph e = make({{0, 1}});
  const Graph p3 = e.with_edge(1, 2);
  CHECK(p3.vertex_count() == 3);
  CHECK(p3.edge_count() == 2);
  CHECK(e.edge_count() == 1);  // original untouched
  CHECK_THROWS_AS(p3.with_edge(0, 1), std::invalid_argument);
}

TEST_CASE("edges round-trips through from_edge_list") {
  const Graph g = make({{0, 3}, {1, 2}, {2, 3}});
  auto back = g.edges();
  CHECK(Graph::from_edge_list(back) == g);
}

TEST_CASE("components splits the non-isolated part") {
  const std::vector<Graph> parts{complete(4), complete(4), complete(2)};
  const Graph g = disjoint_union(parts);
  auto comps = g.components();
  REQUIRE(comps.size() == 3);
  std::vector<int> sizes;
  for (const auto& c : comps) sizes.push_back(c.vertex_count());
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{2, 4, 4});

  CHECK(make({{0, 1}, {1, 2}}).components().size() == 1);
  CHECK(make({}).components().empty());
}

TEST_CASE("disjoint_union adds blocks and enforces the vertex budget") {
  const std::vector<Graph> parts{complete(4), complete(4), complete(2)};
  const Graph g = disjoint_union(parts);
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 13);

  const std::vector<Graph> single{complete(3)};
  CHECK(disjoint_union(single) == complete(3));

  const std::vector<Graph> too_many(17, complete(4));
  CHECK_THROWS_AS(disjoint_union(too_many), std::invalid_argument);
}

TEST_CASE("degree data") {
  CHECK(complete(4).max_degree() == 3);
  CHECK(make({}).max_degree() == 0);
  // triangle plus a pendant vertex
  const Graph l4 = make({{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  CHECK(l4.degree_sequence() == std::vector<int>{1, 2, 2, 3});
}

TEST_CASE("disjoint_union degree sequence is the multiset union") {
  const Graph a = make({{0, 1}, {1, 2}});
  const Graph b = complete(3);
  const std::vector<Graph> parts{a, b};
  const Graph u = disjoint_union(parts);
  CHECK(u.edge_count() == a.edge_count() + b.edge_count());
  auto da = a.degree_sequence();
  auto db = b.degree_sequence();
  da.insert(da.end(), db.begin(), db.end());
  std::sort(da.begin(), da.end());
  CHECK(u.degree_sequence() == da);
}

TEST_CASE("graph6 decodes hand-checked strings") {
  const Graph k2 = parse_graph6("A_");
  CHECK(k2.vertex_count() == 2);
  CHECK(k2.edge_count() == 1);
  CHECK(k2.has_edge(0, 1));

  CHECK(parse_graph6("?").vertex_count() == 0);
  CHECK(parse_graph6("@").vertex_count() == 1);

  const Graph p4 = parse_graph6("Ch");  // bits 101001: the path 0-1-2-3
  CHECK(p4.vertex_count() == 4);
  CHECK(p4.edge_count() == 3);
  CHECK(p4.degree_sequence() == std::vector<int>{1, 1, 2, 2});

  const Graph c4 = parse_graph6("Cr");  // bits 110011: the 4-cycle
  CHECK(c4.edge_count() == 4);
  CHECK(c4.degree_sequence() == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("graph6 round-trip is the identity") {
  std::vector<Graph> samples{make({}),      complete(1), complete(2), complete(5),
                             complete(10),  make({{0, 1}, {1, 2}, {0, 3}, {3, 4}}),
                             parse_graph6("Cr"), parse_graph6("Ch")};
  // star with a 64-vertex span exercises the long-form size header
  std::vector<std::pair<int, int>> star;
  for (int v = 1; v < 64; ++v) star.emplace_back(0, v);
  samples.push_back(Graph::from_edge_list(star));
  star.pop_back();
  samples.push_back(Graph::from_edge_list(star));  // 63 vertices

  for (const Graph& g : samples) {
    const std::string s = to_graph6(g);
    CHECK(parse_graph6(s) == g);
  }
  // string-level identity on canonical encodings
  for (const char* s : {"?", "@", "A_", "Ch", "Cr"}) {
    CHECK(to_graph6(parse_graph6(s)) == s);
  }
  // the stars need the three-byte size header
  CHECK(to_graph6(samples.back()).front() == '~');
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6("garbage\x01"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph6("C"), std::invalid_argument);     // truncated body
  CHECK_THROWS_AS(parse_graph6("A_?"), std::invalid_argument);   // trailing byte
  CHECK_THROWS_AS(parse_graph6("A`"), std::invalid_argument);    // nonzero padding
  CHECK_THROWS_AS(parse_graph6("~?A???????????????????"), std::invalid_argument);  // n > 64
}

TEST_CASE("canonical_form is a relabeling invariant") {
  const Graph p3a = make({{0, 1}, {1, 2}});
  const Graph p3b = make({{2, 0}, {0, 1}});  // same path, middle vertex 0
  CHECK(canonical_form(p3a) == canonical_form(p3b));

  const Graph k3 = complete(3);
  const Graph p4 = make({{0, 1}, {1, 2}, {2, 3}});
  CHECK(canonical_form(k3) != canonical_form(p4));

  const std::vector<Graph> padded_parts{k3, Graph(1)};
  CHECK(canonical_form(disjoint_union(padded_parts)) == canonical_form(k3));
}

TEST_CASE("canonical_graph is idempotent and certificate-consistent") {
  const std::vector<Graph> samples{complete(4), make({{0, 1}, {1, 2}, {0, 3}, {3, 4}}),
                                   make({{0, 5}, {5, 3}, {3, 0}, {1, 2}})};
  for (const Graph& g : samples) {
    const Graph c = canonical_graph(g);
    CHECK(canonical_graph(c) == c);
    CHECK(to_graph6(c) == canonical_form(g).bytes);
  }
}

TEST_CASE("certificates agree with brute-force isomorphism on all classes up to 5 vertices") {
  // ground truth built with the permutation oracle only
  std::vector<Graph> reps;
  for (int n = 0; n <= 5; ++n) {
    auto classes = oracles::labeled_classes(n, true);
    reps.insert(reps.end(), classes.begin(), classes.end());
  }
  // frozen class counts by vertex count: 1, 0, 1, 2, 7, 23
  CHECK(reps.size() == 1 + 0 + 1 + 2 + 7 + 23);

  std::vector<std::string> certs;
  for (const Graph& g : reps) certs.push_back(canonical_form(g).bytes);
  for (size_t i = 0; i < reps.size(); ++i) {
    for (size_t j = i + 1; j < reps.size(); ++j) {
      const bool iso = oracles::isomorphic(reps[i], reps[j]);
      REQUIRE(iso == (certs[i] == certs[j]));
      REQUIRE(!iso);  // oracle dedup means all reps are distinct
    }
  }
}

TEST_CASE("certificates collapse relabelings of the same labeled graph") {
  // every labeled graph on 4 vertices, relabeled by a fixed permutation
  const int perm[4] = {2, 0, 3, 1};
  for (unsigned mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> edges, mapped;
    int slot = 0;
    for (int v = 1; v < 4; ++v) {
      for (int u = 0; u < v; ++u, ++slot) {
        if ((mask >> slot) & 1) {
          edges.emplace_back(u, v);
          mapped.emplace_back(perm[u], perm[v]);
        }
      }
    }
    const Graph g = Graph::from_edge_list(edges);
    const Graph h = Graph::from_edge_list(mapped);
    REQUIRE(canonical_form(g) == canonical_form(h));
  }
}
