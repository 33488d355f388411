#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "extremal/cliques.hpp"
#include "extremal/colex.hpp"
#include "extremal/graph6.hpp"
#include "oracles.hpp"

using namespace extremal;

TEST_CASE("colex_decompose basic values") {
  auto d = colex_decompose(7);
  CHECK(d.r == 4);
  CHECK(d.s == 1);
  d = colex_decompose(0);
  CHECK(d.r == 1);
  CHECK(d.s == 0);
  d = colex_decompose(10);
  CHECK(d.r == 5);
  CHECK(d.s == 0);
  CHECK_THROWS_AS(colex_decompose(-1), std::invalid_argument);
}

TEST_CASE("colex_decompose matches the smallest-r scan") {
  for (long long m = 0; m <= 500; ++m) {
    long long r = 1;
    while ((r + 1) * r / 2 <= m) ++r;  // smallest r with C(r+1,2) > m
    const auto d = colex_decompose(m);
    REQUIRE(d.r == r);
    REQUIRE(d.s == m - r * (r - 1) / 2);
    REQUIRE(d.s >= 0);
    REQUIRE(d.s < d.r);
  }
}

TEST_CASE("colex_pair_unrank follows the (max, min) order") {
  using P = std::pair<long long, long long>;
  CHECK(colex_pair_unrank(0) == P{1, 2});
  CHECK(colex_pair_unrank(1) == P{1, 3});
  CHECK(colex_pair_unrank(2) == P{2, 3});
  CHECK(colex_pair_unrank(3) == P{1, 4});
  CHECK(colex_pair_unrank(4) == P{2, 4});
  CHECK(colex_pair_unrank(5) == P{3, 4});
  CHECK(colex_pair_unrank(6) == P{1, 5});

  const auto expected = oracles::pairs_by_max_then_min(100);
  for (long long i = 0; i < 100; ++i) {
    REQUIRE(colex_pair_unrank(i) == expected[static_cast<size_t>(i)]);
  }
}

TEST_CASE("build_colex gives a clique plus one partial vertex") {
  const Graph g5 = build_colex(5);  // K_3 on {0,1,2} plus vertex 3 joined to {0,1}
  CHECK(g5.vertex_count() == 4);
  CHECK(g5.edge_count() == 5);
  CHECK(g5.has_edge(0, 1));
  CHECK(g5.has_edge(0, 2));
  CHECK(g5.has_edge(1, 2));
  CHECK(g5.has_edge(0, 3));
  CHECK(g5.has_edge(1, 3));
  CHECK(!g5.has_edge(2, 3));

  CHECK(build_colex(0).vertex_count() == 0);

  const Graph g6 = build_colex(6);
  CHECK(canonical_form(g6) == canonical_form(parse_graph6("C~")));  // K_4

  CHECK(build_colex(2016).vertex_count() == 64);  // C(64,2) just fits
  CHECK_THROWS_AS(build_colex(2017), std::invalid_argument);
}

TEST_CASE("colex_kt closed form") {
  CHECK(colex_kt(5, 3) == 2);
  CHECK(colex_kt(6, 3) == 4);
  CHECK(colex_kt(4, 4) == 0);
  CHECK(colex_kt(0, 2) == 0);
  CHECK_THROWS_AS(colex_kt(5, 1), std::invalid_argument);
}

TEST_CASE("colex_kt equals the clique count of the colex graph") {
  for (long long m = 0; m <= 40; ++m) {
    const Graph g = build_colex(m);
    for (int t = 2; t <= 6; ++t) {
      REQUIRE(colex_kt(m, t) == count_kt(g, t));
    }
  }
}

TEST_CASE("colex_kt is non-decreasing in m") {
  for (int t = 2; t <= 6; ++t) {
    Count prev = 0;
    for (long long m = 0; m <= 60; ++m) {
      const Count cur = colex_kt(m, t);
      REQUIRE(cur >= prev);
      prev = cur;
    }
  }
}

TEST_CASE("kk_bound_real values and clamping") {
  CHECK(std::fabs(kk_bound_real(6, 3) - 4.0) <= 1e-9);
  CHECK(std::fabs(kk_bound_real(7, 3) - 5.3081) <= 1e-4);
  CHECK(kk_bound_real(1, 3) == 0.0);
  CHECK(kk_bound_real(0, 3) == 0.0);
  CHECK_THROWS_AS(kk_bound_real(6, 2), std::invalid_argument);
}

TEST_CASE("kk_bound_real agrees with the closed form at full-clique sizes") {
  // when m = C(r,2) the relaxation is tight: x = r exactly
  for (long long r = 3; r <= 30; ++r) {
    const long long m = r * (r - 1) / 2;
    for (long long t = 3; t <= 5; ++t) {
      const double expect = binom_exact(r, t).get_d();
      REQUIRE(std::fabs(kk_bound_real(m, t) - expect) <= 1e-9 * std::max(1.0, expect));
    }
  }
}
