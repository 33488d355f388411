#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "extremal/cliques.hpp"
#include "extremal/colex.hpp"
#include "extremal/extremal.hpp"
#include "extremal/graph.hpp"
#include "extremal/graph6.hpp"

using namespace extremal;

namespace {

Graph complete(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
  }
  return Graph::from_edge_list(edges);
}

Graph union_of(std::vector<Graph> parts) { return disjoint_union(parts); }

// vertex count of q K_{delta+1} plus the colex remainder; used to skip
// grid points that cannot fit in 64 vertices
long long built_vertices(int delta, long long m) {
  const auto d = decompose(m, delta);
  long long v = d.q * (delta + 1);
  if (d.b > 0) v += d.r + (d.s > 0 ? 1 : 0);
  return v;
}

}  // namespace

TEST_CASE("decompose splits into full blocks plus colex remainder") {
  auto d = decompose(17, 4);
  CHECK(d.q == 1);
  CHECK(d.b == 7);
  CHECK(d.r == 4);
  CHECK(d.s == 1);

  d = decompose(0, 3);
  CHECK(d.q == 0);
  CHECK(d.b == 0);
  CHECK(d.r == 1);
  CHECK(d.s == 0);

  d = decompose(13, 3);
  CHECK(d.q == 2);
  CHECK(d.b == 1);
  CHECK(d.r == 2);
  CHECK(d.s == 0);

  CHECK_THROWS_AS(decompose(-1, 3), std::invalid_argument);
  CHECK_THROWS_AS(decompose(5, 0), std::invalid_argument);
}

TEST_CASE("decompose reassembles the edge count exactly") {
  for (int delta = 1; delta <= 7; ++delta) {
    for (long long m = 0; m <= 200; ++m) {
      const auto d = decompose(m, delta);
      const long long block = static_cast<long long>(delta + 1) * delta / 2;
      REQUIRE(d.q * block + d.r * (d.r - 1) / 2 + d.s == m);
      REQUIRE(d.b < block);
      REQUIRE(d.s >= 0);
      REQUIRE(d.s < d.r);
      REQUIRE((d.r <= delta || d.b == 0));
    }
  }
}

TEST_CASE("extremal_value closed form") {
  CHECK(extremal_value(3, 3, 13) == 8);
  CHECK(extremal_value(3, 4, 14) == 11);
  CHECK(extremal_value(5, 3, 6) == 0);  // t beyond the largest possible clique
  CHECK_THROWS_AS(extremal_value(2, 3, 5), std::invalid_argument);
}

TEST_CASE("extremal_value reduces to the colex count when q=0") {
  for (int delta = 2; delta <= 7; ++delta) {
    const long long block = static_cast<long long>(delta + 1) * delta / 2;
    for (long long m = 0; m < block; ++m) {
      for (int t = 3; t <= delta + 1; ++t) {
        REQUIRE(extremal_value(t, delta, m) == colex_kt(m, t));
      }
    }
  }
}

TEST_CASE("extremal_value is non-decreasing in m") {
  for (int delta = 2; delta <= 5; ++delta) {
    for (int t = 3; t <= delta + 1; ++t) {
      Count prev = 0;
      for (long long m = 0; m <= 80; ++m) {
        const Count cur = extremal_value(t, delta, m);
        REQUIRE(cur >= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("build_extremal constructions") {
  const Graph g13 = build_extremal(3, 3, 13);
  CHECK(canonical_form(g13) ==
        canonical_form(union_of({complete(4), complete(4), complete(2)})));

  CHECK(canonical_form(build_extremal(3, 4, 10)) == canonical_form(complete(5)));

  const Graph l4 = Graph::from_edge_list(
      std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  CHECK(canonical_form(build_extremal(3, 4, 14)) ==
        canonical_form(union_of({complete(5), l4})));
}

TEST_CASE("the construction attains the closed-form value") {
  for (int delta = 1; delta <= 7; ++delta) {
    for (long long m = 0; m <= 60; ++m) {
      if (built_vertices(delta, m) > Graph::kMaxVertices) continue;
      const Graph g = build_extremal(3, delta, m);
      REQUIRE(g.edge_count() == m);
      REQUIRE(g.max_degree() <= delta);
      for (int t = 3; t <= delta + 1; ++t) {
        REQUIRE(count_kt(g, t) == extremal_value(t, delta, m));
      }
    }
  }
}

TEST_CASE("family_spec picks the case from (t, r, s)") {
  auto f = family_spec(3, 4, 8);  // r=4, s=2
  CHECK(f.tag == FamilyCase::unique_colex);
  CHECK(f.r == 4);
  CHECK(f.s == 2);

  f = family_spec(3, 4, 4);  // r=3, s=1
  CHECK(f.tag == FamilyCase::contains_Kr);

  f = family_spec(4, 4, 4);  // r=3 < t
  CHECK(f.tag == FamilyCase::any_graph);

  f = family_spec(3, 4, 0);  // r=1 < t: every 0-edge graph (the empty one)
  CHECK(f.tag == FamilyCase::any_graph);

  CHECK_THROWS_AS(family_spec(3, 4, 10), std::invalid_argument);
  CHECK_THROWS_AS(family_spec(3, 4, -1), std::invalid_argument);
}

TEST_CASE("is_extremal recognizes maximizers and rejects others") {
  const auto yes = is_extremal(union_of({complete(4), complete(4), complete(2)}), 3, 3);
  CHECK(yes.is_extremal);
  CHECK(yes.q_found == 2);

  // K_4 + P_3 + K_2: nine edges, b=3 wants a triangle in the remainder
  const Graph p3 = Graph::from_edge_list(std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  const auto no = is_extremal(union_of({complete(4), p3, complete(2)}), 3, 3);
  CHECK(!no.is_extremal);
  CHECK(no.q_found == 1);

  const auto k5 = is_extremal(complete(5), 3, 4);
  CHECK(k5.is_extremal);
  CHECK(k5.q_found == 1);
  CHECK(k5.remainder_certificate.bytes == to_graph6(Graph()));

  CHECK_THROWS_AS(is_extremal(complete(5), 3, 3), std::invalid_argument);
}

TEST_CASE("is_extremal accepts its own construction on a grid") {
  for (int delta = 2; delta <= 5; ++delta) {
    for (int t = 3; t <= delta + 1; ++t) {
      for (long long m = 0; m <= 20; ++m) {
        const auto v = is_extremal(build_extremal(t, delta, m), t, delta);
        CAPTURE(delta);
        CAPTURE(t);
        CAPTURE(m);
        REQUIRE(v.is_extremal);
      }
    }
  }
}

TEST_CASE("total_extremal_value closed form") {
  CHECK(total_extremal_value(3, 10) == 16);
  CHECK(total_extremal_value(3, 6) == 11);
  CHECK(total_extremal_value(2, 2) == 2);
  CHECK(total_extremal_value(1, 3) == 3);  // three disjoint edges
}

TEST_CASE("total_extremal_value matches the profile of the construction") {
  for (int delta = 1; delta <= 5; ++delta) {
    for (long long m = 0; m <= 30; ++m) {
      if (built_vertices(delta, m) > Graph::kMaxVertices) continue;
      REQUIRE(clique_profile(build_extremal(3, delta, m)).total ==
              total_extremal_value(delta, m));
    }
  }
}

TEST_CASE("the pendant-for-K_2 swap ties the total exactly when s=1") {
  for (int delta = 2; delta <= 5; ++delta) {
    for (long long m = 0; m <= 30; ++m) {
      const auto d = decompose(m, delta);
      if (d.s != 1) continue;
      std::vector<Graph> parts(static_cast<size_t>(d.q), complete(delta + 1));
      parts.push_back(complete(static_cast<int>(d.r)));
      parts.push_back(complete(2));
      const Graph swapped = disjoint_union(parts);
      if (swapped.vertex_count() > Graph::kMaxVertices) continue;
      REQUIRE(clique_profile(swapped).total == total_extremal_value(delta, m));
    }
  }
}

TEST_CASE("is_total_extremal accepts both achievers and rejects others") {
  const auto tie = is_total_extremal(union_of({complete(4), complete(3), complete(2)}), 3);
  CHECK(tie.is_extremal);

  const Graph l4 = Graph::from_edge_list(
      std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}});
  const auto std_max = is_total_extremal(union_of({complete(4), l4}), 3);
  CHECK(std_max.is_extremal);

  const Graph p4 = Graph::from_edge_list(
      std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
  const auto no = is_total_extremal(union_of({complete(4), p4}), 3);
  CHECK(!no.is_extremal);

  CHECK_THROWS_AS(is_total_extremal(complete(5), 3), std::invalid_argument);
}

TEST_CASE("vertex-budget variants") {
  CHECK(vertex_extremal_value(7, 3, 3) == 5);
  CHECK(vertex_extremal_value(5, 2, 3) == 1);
  CHECK(vertex_extremal_value(4, 3, 3) == 4);
  CHECK(vertex_total_value(4, 3) == 11);
  CHECK(vertex_total_value(7, 3) == 15);  // K_4 plus K_3
  CHECK(vertex_total_value(0, 3) == 0);

  // the construction qK_{delta+1} plus K_{r'} attains both closed forms
  for (int delta = 1; delta <= 5; ++delta) {
    for (long long n = 0; n <= 40; ++n) {
      const long long q = n / (delta + 1);
      const int rp = static_cast<int>(n % (delta + 1));
      std::vector<Graph> parts(static_cast<size_t>(q), complete(delta + 1));
      if (rp > 0) parts.push_back(complete(rp));
      const Graph g = disjoint_union(parts);
      for (int t = 3; t <= delta + 1; ++t) {
        REQUIRE(count_kt(g, t) == vertex_extremal_value(n, delta, t));
      }
      REQUIRE(clique_profile(g).total == vertex_total_value(n, delta));
    }
  }
}
