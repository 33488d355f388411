#pragma once

#include <string>

#include "extremal/binom.hpp"
#include "extremal/graph.hpp"

namespace extremal {

/// m = q*C(delta+1,2) + b with 0 <= b < C(delta+1,2), then b = C(r,2) + s
/// with 0 <= s < r (and r <= delta).
struct EdgeDecomposition {
  long long m;
  int delta;
  long long q;
  long long b;
  long long r;
  long long s;
};

EdgeDecomposition decompose(long long m, int delta);

/// Maximum number of K_t's over m-edge graphs with max degree <= delta:
/// q*C(delta+1,t) + C(r,t) + C(s,t-1). Yields 0 whenever t > delta+1.
Count extremal_value(int t, int delta, long long m);

/// A maximizer: q disjoint copies of K_{delta+1} plus the b-edge colex
/// graph. t only fixes the interface; the construction is t-independent.
Graph build_extremal(int t, int delta, long long m);

/// The three shapes the non-K_{delta+1} remainder of a maximizer can
/// take, by (t, r, s): only the colex graph (s >= t-1), any b-edge graph
/// containing K_r (r >= t, s < t-1), or any b-edge graph at all (r < t).
enum class FamilyCase { unique_colex, contains_Kr, any_graph };

struct ExtremalFamilySpec {
  FamilyCase tag;
  int t;
  int delta;
  long long b;
  long long r;
  long long s;
};

ExtremalFamilySpec family_spec(int t, int delta, long long b);

struct ExtremalityVerdict {
  bool is_extremal;
  long long q_found;
  CanonicalForm remainder_certificate;
  std::string reason;
};

/// Whether g (isolated vertices ignored) attains extremal_value for its
/// own edge count: exactly q components equal to K_{delta+1} and a
/// remainder satisfying the family case. Throws if max degree > delta.
ExtremalityVerdict is_extremal(const Graph& g, int t, int delta);

/// Maximum total number of complete subgraphs (all orders >= 2) over
/// m-edge graphs with max degree <= delta:
/// q*(2^{delta+1}-delta-2) + (2^r-r-1) + (2^s-1).
Count total_extremal_value(int delta, long long m);

/// Whether g attains total_extremal_value: g is the standard maximizer,
/// or s=1 and g swaps the pendant for a separate K_2 (q copies of
/// K_{delta+1} plus K_r plus K_2). Throws if max degree > delta.
ExtremalityVerdict is_total_extremal(const Graph& g, int delta);

/// Vertex-budget variants: n = q*(delta+1) + r' with 0 <= r' <= delta.
Count vertex_extremal_value(long long n, int delta, int t);
Count vertex_total_value(long long n, int delta);

}  // namespace extremal
