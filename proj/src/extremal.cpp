#include "extremal/extremal.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "extremal/cliques.hpp"
#include "extremal/colex.hpp"

namespace extremal {

namespace {

Count two_pow_minus_tail(long long k) {
  // 2^k - k - 1: total complete subgraphs of order >= 2 in K_k
  Count c = Count(1) << static_cast<unsigned long>(k);
  return c - static_cast<long>(k) - 1;
}

Graph complete_graph(int k) { return build_colex(static_cast<long long>(k) * (k - 1) / 2); }

bool is_complete_on(const Graph& g, int k) {
  return g.vertex_count() == k && g.edge_count() == static_cast<long long>(k) * (k - 1) / 2;
}

// split off the components equal to K_{delta+1} and reassemble the rest
std::pair<long long, Graph> strip_full_cliques(const Graph& g, int delta) {
  long long q_found = 0;
  std::vector<Graph> rest;
  for (Graph& comp : g.components()) {
    if (is_complete_on(comp, delta + 1)) {
      ++q_found;
    } else {
      rest.push_back(std::move(comp));
    }
  }
  return {q_found, disjoint_union(rest)};
}

}  // namespace

EdgeDecomposition decompose(long long m, int delta) {
  if (m < 0) throw std::invalid_argument("decompose: negative edge count");
  if (delta < 1) throw std::invalid_argument("decompose: max degree must be >= 1");
  const long long block = static_cast<long long>(delta + 1) * delta / 2;
  const long long q = m / block;
  const long long b = m % block;
  const ColexDecomposition cd = colex_decompose(b);
  return {m, delta, q, b, cd.r, cd.s};
}

Count extremal_value(int t, int delta, long long m) {
  if (t < 3) throw std::invalid_argument("extremal_value: t must be >= 3");
  const EdgeDecomposition d = decompose(m, delta);
  return binom_exact(delta + 1, t) * static_cast<long>(d.q) + binom_exact(d.r, t) +
         binom_exact(d.s, t - 1);
}

Graph build_extremal(int t, int delta, long long m) {
  if (t < 3) throw std::invalid_argument("build_extremal: t must be >= 3");
  const EdgeDecomposition d = decompose(m, delta);
  std::vector<Graph> parts;
  const Graph block = complete_graph(delta + 1);
  for (long long i = 0; i < d.q; ++i) parts.push_back(block);
  parts.push_back(build_colex(d.b));
  return disjoint_union(parts);
}

ExtremalFamilySpec family_spec(int t, int delta, long long b) {
  if (t < 3) throw std::invalid_argument("family_spec: t must be >= 3");
  if (delta < 1) throw std::invalid_argument("family_spec: max degree must be >= 1");
  const long long block = static_cast<long long>(delta + 1) * delta / 2;
  if (b < 0 || b >= block) throw std::invalid_argument("family_spec: b out of range");
  const ColexDecomposition cd = colex_decompose(b);
  FamilyCase tag;
  if (cd.r < t) {
    tag = FamilyCase::any_graph;
  } else if (cd.s >= t - 1) {
    tag = FamilyCase::unique_colex;
  } else {
    tag = FamilyCase::contains_Kr;
  }
  return {tag, t, delta, b, cd.r, cd.s};
}

ExtremalityVerdict is_extremal(const Graph& g, int t, int delta) {
  if (t < 3) throw std::invalid_argument("is_extremal: t must be >= 3");
  if (g.max_degree() > delta) throw std::invalid_argument("is_extremal: max degree exceeded");

  const EdgeDecomposition d = decompose(g.edge_count(), delta);
  auto [q_found, remainder] = strip_full_cliques(g, delta);
  ExtremalityVerdict v;
  v.q_found = q_found;
  v.remainder_certificate = canonical_form(remainder);
  if (q_found != d.q) {
    v.is_extremal = false;
    v.reason = "expected " + std::to_string(d.q) + " full-degree clique components, found " +
               std::to_string(q_found);
    return v;
  }

  const ExtremalFamilySpec fam = family_spec(t, delta, d.b);
  switch (fam.tag) {
    case FamilyCase::unique_colex:
      v.is_extremal = v.remainder_certificate == canonical_form(build_colex(d.b));
      v.reason = v.is_extremal ? "remainder is the colex graph"
                               : "remainder differs from the colex graph";
      break;
    case FamilyCase::contains_Kr:
      v.is_extremal = has_clique(remainder, static_cast<int>(d.r));
      v.reason = v.is_extremal
                     ? "remainder contains K_" + std::to_string(d.r)
                     : "remainder lacks K_" + std::to_string(d.r);
      break;
    case FamilyCase::any_graph:
      v.is_extremal = true;
      v.reason = "every remainder qualifies (r < t)";
      break;
  }
  return v;
}

Count total_extremal_value(int delta, long long m) {
  const EdgeDecomposition d = decompose(m, delta);
  return two_pow_minus_tail(delta + 1) * static_cast<long>(d.q) + two_pow_minus_tail(d.r) +
         ((Count(1) << static_cast<unsigned long>(d.s)) - 1);
}

ExtremalityVerdict is_total_extremal(const Graph& g, int delta) {
  if (g.max_degree() > delta) throw std::invalid_argument("is_total_extremal: max degree exceeded");

  const EdgeDecomposition d = decompose(g.edge_count(), delta);
  auto [q_found, remainder] = strip_full_cliques(g, delta);
  ExtremalityVerdict v;
  v.q_found = q_found;
  v.remainder_certificate = canonical_form(remainder);

  const CanonicalForm self = canonical_form(g);
  if (self == canonical_form(build_extremal(3, delta, d.m))) {
    v.is_extremal = true;
    v.reason = "standard maximizer";
    return v;
  }
  if (d.s == 1) {
    std::vector<Graph> parts;
    const Graph block = complete_graph(delta + 1);
    for (long long i = 0; i < d.q; ++i) parts.push_back(block);
    parts.push_back(complete_graph(static_cast<int>(d.r)));
    parts.push_back(complete_graph(2));
    if (self == canonical_form(disjoint_union(parts))) {
      v.is_extremal = true;
      v.reason = "pendant-for-K_2 swap (s=1 tie)";
      return v;
    }
  }
  v.is_extremal = false;
  v.reason = d.s == 1 ? "matches neither maximizer of the s=1 tie"
                      : "differs from the unique maximizer";
  return v;
}

Count vertex_extremal_value(long long n, int delta, int t) {
  if (n < 0) throw std::invalid_argument("vertex_extremal_value: negative vertex count");
  if (delta < 1) throw std::invalid_argument("vertex_extremal_value: max degree must be >= 1");
  if (t < 3) throw std::invalid_argument("vertex_extremal_value: t must be >= 3");
  const long long q = n / (delta + 1);
  const long long rp = n % (delta + 1);
  return binom_exact(delta + 1, t) * static_cast<long>(q) + binom_exact(rp, t);
}

Count vertex_total_value(long long n, int delta) {
  if (n < 0) throw std::invalid_argument("vertex_total_value: negative vertex count");
  if (delta < 1) throw std::invalid_argument("vertex_total_value: max degree must be >= 1");
  const long long q = n / (delta + 1);
  const long long rp = n % (delta + 1);
  return two_pow_minus_tail(delta + 1) * static_cast<long>(q) + two_pow_minus_tail(rp);
}

}  // namespace extremal
