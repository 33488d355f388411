#include "extremal/colex.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace extremal {

namespace {

long long pairs_below(long long r) { return r * (r - 1) / 2; }

}  // namespace

ColexDecomposition colex_decompose(long long m) {
  if (m < 0) throw std::invalid_argument("colex_decompose: negative edge count");
  // seed from the quadratic formula, then settle: want C(r,2) <= m < C(r+1,2)
  long long r = std::max<long long>(
      1, static_cast<long long>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m))) / 2.0));
  while (pairs_below(r) > m) --r;
  while (pairs_below(r + 1) <= m) ++r;
  return {m, r, m - pairs_below(r)};
}

std::pair<long long, long long> colex_pair_unrank(long long i) {
  const ColexDecomposition d = colex_decompose(i);
  return {d.s + 1, d.r + 1};
}

Graph build_colex(long long m) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<size_t>(m));
  for (long long i = 0; i < m; ++i) {
    const auto [lo, hi] = colex_pair_unrank(i);
    if (hi > Graph::kMaxVertices) {
      throw std::invalid_argument("build_colex: vertex budget exceeded");
    }
    edges.emplace_back(static_cast<int>(lo - 1), static_cast<int>(hi - 1));
  }
  return Graph::from_edge_list(edges);
}

Count colex_kt(long long m, long long t) {
  if (t < 2) throw std::invalid_argument("colex_kt: t must be >= 2");
  const ColexDecomposition d = colex_decompose(m);
  return binom_exact(d.r, t) + binom_exact(d.s, t - 1);
}

double kk_bound_real(long long m, long long t) {
  if (t < 3) throw std::invalid_argument("kk_bound_real: t must be >= 3");
  if (m < 0) throw std::invalid_argument("kk_bound_real: negative edge count");
  const double x = (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(m))) / 2.0;
  if (x < static_cast<double>(t)) return 0.0;
  return binom_real(x, t);
}

}  // namespace extremal
