#pragma once

#include <utility>

#include "extremal/binom.hpp"
#include "extremal/graph.hpp"

namespace extremal {

/// m = C(r,2) + s with 0 <= s < r; unique for every m >= 0 (m=0 gives r=1, s=0).
struct ColexDecomposition {
  long long m;
  long long r;
  long long s;
};

ColexDecomposition colex_decompose(long long m);

/// i-th pair (0-indexed) in colex order over {1, 2, 3, ...}:
/// {1,2}, {1,3}, {2,3}, {1,4}, ... Returned as (low, high).
std::pair<long long, long long> colex_pair_unrank(long long i);

/// Graph on the first m colex pairs, shifted to 0-indexed labels:
/// K_r on {0..r-1} plus vertex r joined to {0..s-1} when s > 0.
Graph build_colex(long long m);

/// k_t of the colex graph: C(r,t) + C(s,t-1). Requires t >= 2.
Count colex_kt(long long m, long long t);

/// Real-relaxation clique bound: C(x,t) with C(x,2) = m, i.e.
/// x = (1+sqrt(1+8m))/2; clamped to 0 when x < t. Requires t >= 3.
double kk_bound_real(long long m, long long t);

}  // namespace extremal
