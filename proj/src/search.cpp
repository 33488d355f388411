#include "extremal/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include "extremal/cliques.hpp"
#include "extremal/colex.hpp"
#include "extremal/extremal.hpp"
#include "extremal/graph6.hpp"

namespace extremal {

namespace {

int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
  const int nw = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(resolve_jobs(jobs)), std::max<std::size_t>(count, 1)));
  if (nw <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  workers.reserve(nw);
  for (int w = 0; w < nw; ++w) {
    workers.emplace_back([&fn, w, nw, count] {
      for (std::size_t i = static_cast<std::size_t>(w); i < count; i += nw) fn(i);
    });
  }
  for (auto& th : workers) th.join();
}

std::vector<std::uint64_t> component_masks(const Graph& g) {
  std::vector<std::uint64_t> out;
  std::uint64_t todo = g.non_isolated_mask();
  while (todo) {
    const int start = std::countr_zero(todo);
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        const int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(v);
      }
      frontier = next & ~comp;
      comp |= next;
    }
    todo &= ~comp;
    out.push_back(comp);
  }
  return out;
}

// Stored graphs keep every component canonically labeled on a contiguous
// block, so a component's certificate is its graph6 bytes directly.
struct CompInfo {
  std::vector<Graph> comps;
  std::vector<std::string> certs;
  std::vector<std::uint64_t> masks;
  std::array<int, Graph::kMaxVertices> comp_of;
};

CompInfo analyze(const Graph& g) {
  CompInfo info;
  info.masks = component_masks(g);
  info.comps = g.components();
  for (std::size_t i = 0; i < info.masks.size(); ++i) {
    std::uint64_t mask = info.masks[i];
    while (mask) {
      const int v = std::countr_zero(mask);
      mask &= mask - 1;
      info.comp_of[v] = static_cast<int>(i);
    }
    info.certs.push_back(to_graph6(info.comps[i]));
  }
  return info;
}

// Subgraph induced by mask (relabeled ascending) plus one extra edge:
// u to v, or u to a fresh pendant vertex when v < 0.
Graph piece_plus_edge(const Graph& g, std::uint64_t mask, int u, int v) {
  int local[Graph::kMaxVertices];
  int k = 0;
  for (std::uint64_t m2 = mask; m2; m2 &= m2 - 1) local[std::countr_zero(m2)] = k++;

  std::vector<std::pair<int, int>> edges;
  for (std::uint64_t m2 = mask; m2; m2 &= m2 - 1) {
    const int w = std::countr_zero(m2);
    std::uint64_t nb = g.neighbors(w) & mask & ~((std::uint64_t{2} << w) - 1);
    while (nb) {
      const int x = std::countr_zero(nb);
      nb &= nb - 1;
      edges.emplace_back(local[w], local[x]);
    }
  }
  const int a = local[u];
  const int b = v >= 0 ? local[v] : k;
  edges.emplace_back(std::min(a, b), std::max(a, b));
  return Graph::from_edge_list(edges);
}

using ClassMap = std::unordered_map<std::string, Graph>;

// Register parent-minus-dropped-components plus the canonical new piece.
// Key: the sorted component certificates joined with '\n' (equal iff the
// children are isomorphic); value: the canonical child, built on first
// sight only.
void insert_child(ClassMap& out, const CompInfo& info, std::span<const int> dropped,
                  const Graph& canon_piece, const std::string& piece_cert) {
  std::vector<std::pair<const std::string*, const Graph*>> parts;
  parts.reserve(info.comps.size() + 1);
  for (std::size_t i = 0; i < info.comps.size(); ++i) {
    if (std::find(dropped.begin(), dropped.end(), static_cast<int>(i)) != dropped.end()) continue;
    parts.emplace_back(&info.certs[i], &info.comps[i]);
  }
  parts.emplace_back(&piece_cert, &canon_piece);
  std::sort(parts.begin(), parts.end(),
            [](const auto& a, const auto& b) { return *a.first < *b.first; });

  std::string key;
  for (const auto& [cert, graph] : parts) {
    key += *cert;
    key += '\n';
  }
  if (out.find(key) != out.end()) return;

  std::vector<Graph> ordered;
  ordered.reserve(parts.size());
  for (const auto& [cert, graph] : parts) ordered.push_back(*graph);
  out.emplace(std::move(key), disjoint_union(ordered));
}

void expand(const Graph& g, int delta, const Graph& k2, const std::string& k2_cert,
            ClassMap& out) {
  const CompInfo info = analyze(g);
  const int n = g.vertex_count();
  const auto can_grow = [&](int v) { return delta < 0 || g.degree(v) < delta; };

  // edge between existing vertices (possibly merging two components)
  for (int v = 1; v < n; ++v) {
    if (!can_grow(v)) continue;
    for (int u = 0; u < v; ++u) {
      if (!can_grow(u) || g.has_edge(u, v)) continue;
      const int cu = info.comp_of[u];
      const int cv = info.comp_of[v];
      const Graph piece = piece_plus_edge(g, info.masks[cu] | info.masks[cv], u, v);
      const Graph canon = canonical_graph(piece);
      const std::string cert = to_graph6(canon);
      if (cu == cv) {
        const std::array<int, 1> drop{cu};
        insert_child(out, info, drop, canon, cert);
      } else {
        const std::array<int, 2> drop{cu, cv};
        insert_child(out, info, drop, canon, cert);
      }
    }
  }

  // pendant edge to one fresh vertex
  for (int u = 0; u < n; ++u) {
    if (!can_grow(u)) continue;
    const int cu = info.comp_of[u];
    const Graph piece = piece_plus_edge(g, info.masks[cu], u, -1);
    const Graph canon = canonical_graph(piece);
    const std::string cert = to_graph6(canon);
    const std::array<int, 1> drop{cu};
    insert_child(out, info, drop, canon, cert);
  }

  // fresh disjoint edge
  insert_child(out, info, {}, k2, k2_cert);
}

std::vector<Graph> next_level(const std::vector<Graph>& parents, int delta, int jobs) {
  const std::array<std::pair<int, int>, 1> one_edge{{{0, 1}}};
  const Graph k2 = Graph::from_edge_list(one_edge);
  const std::string k2_cert = to_graph6(k2);

  const int nw = static_cast<int>(std::min<std::size_t>(
      static_cast<std::size_t>(resolve_jobs(jobs)), std::max<std::size_t>(parents.size(), 1)));
  std::vector<ClassMap> locals(static_cast<std::size_t>(nw));
  if (nw <= 1) {
    for (const Graph& p : parents) expand(p, delta, k2, k2_cert, locals[0]);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(nw);
    for (int w = 0; w < nw; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < parents.size(); i += nw) {
          expand(parents[i], delta, k2, k2_cert, locals[w]);
        }
      });
    }
    for (auto& th : workers) th.join();
  }

  ClassMap merged = std::move(locals[0]);
  for (int w = 1; w < nw; ++w) {
    for (auto& [key, graph] : locals[w]) merged.try_emplace(key, std::move(graph));
  }

  std::vector<std::pair<std::string, Graph>> items;
  items.reserve(merged.size());
  for (auto& [key, graph] : merged) {
    std::string cert = to_graph6(graph);
    items.emplace_back(std::move(cert), std::move(graph));
  }
  std::sort(items.begin(), items.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  std::vector<Graph> level;
  level.reserve(items.size());
  for (auto& [cert, graph] : items) level.push_back(std::move(graph));
  return level;
}

}  // namespace

CorpusCache::CorpusCache(long long cap, int jobs) : cap_(0), jobs_(jobs) { set_cap(cap); }

void CorpusCache::set_cap(long long cap) {
  if (cap < 0 || cap > kMaxCap) {
    throw std::invalid_argument("enumeration cap must be between 0 and " +
                                std::to_string(kMaxCap));
  }
  cap_ = cap;
}

std::span<const Graph> CorpusCache::level(long long m, int max_degree) {
  if (m < 0) throw std::invalid_argument("level: negative edge count");
  if (max_degree != -1 && max_degree < 1) {
    throw std::invalid_argument("level: degree bound must be >= 1, or -1 for unbounded");
  }
  if (m > cap_) {
    throw std::length_error("enumeration cap exceeded (cap " + std::to_string(cap_) +
                            ", requested " + std::to_string(m) + ")");
  }
  auto& chain = chains_[max_degree];
  if (chain.empty()) chain.push_back({Graph()});
  while (static_cast<long long>(chain.size()) <= m) {
    chain.push_back(next_level(chain.back(), max_degree, jobs_));
  }
  return chain[static_cast<std::size_t>(m)];
}

std::vector<Graph> enumerate_graphs(const EnumerationSpec& spec, int jobs) {
  CorpusCache cache(spec.m, jobs);
  const auto lvl = cache.level(spec.m, spec.max_degree);
  return {lvl.begin(), lvl.end()};
}

std::pair<Count, std::vector<CanonicalForm>> brute_max(long long m, int delta, int t,
                                                       CorpusCache& cache) {
  const auto corpus = cache.level(m, delta);
  std::vector<Count> counts(corpus.size());
  parallel_for(corpus.size(), cache.jobs(),
               [&](std::size_t i) { counts[i] = count_kt(corpus[i], t); });

  Count best = 0;
  for (const Count& c : counts) best = std::max(best, c);
  std::vector<CanonicalForm> argmax;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (counts[i] == best) argmax.push_back(CanonicalForm{to_graph6(corpus[i])});
  }
  return {std::move(best), std::move(argmax)};
}

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

// Shared tail: max/argmax over per-graph values, set agreement against a
// per-graph acceptance flag. Corpus order is certificate order, so the
// argmax list comes out sorted.
void finish_report(VerificationReport& r, std::span<const Graph> corpus,
                   const std::vector<Count>& values, const std::vector<char>& accepted) {
  Count best = 0;
  for (const Count& c : values) best = std::max(best, c);
  r.oracle_max = best;
  r.match = r.oracle_max == r.formula_value;
  r.membership_agreement = true;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const bool achieves = values[i] == r.oracle_max;
    if (achieves) r.argmax.push_back(CanonicalForm{to_graph6(corpus[i])});
    if (achieves != static_cast<bool>(accepted[i])) r.membership_agreement = false;
  }
  r.corpus_size = static_cast<long long>(corpus.size());
}

}  // namespace

VerificationReport verify_main(long long m, int delta, int t, CorpusCache& cache) {
  const auto start = Clock::now();
  VerificationReport r;
  r.m = m;
  r.delta = delta;
  r.t = t;
  r.formula_value = extremal_value(t, delta, m);

  const auto corpus = cache.level(m, delta);
  std::vector<Count> values(corpus.size());
  std::vector<char> accepted(corpus.size());
  parallel_for(corpus.size(), cache.jobs(), [&](std::size_t i) {
    values[i] = count_kt(corpus[i], t);
    accepted[i] = is_extremal(corpus[i], t, delta).is_extremal ? 1 : 0;
  });
  finish_report(r, corpus, values, accepted);
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_total(long long m, int delta, CorpusCache& cache) {
  const auto start = Clock::now();
  VerificationReport r;
  r.m = m;
  r.delta = delta;
  r.formula_value = total_extremal_value(delta, m);

  const auto corpus = cache.level(m, delta);
  std::vector<Count> values(corpus.size());
  std::vector<char> accepted(corpus.size());
  parallel_for(corpus.size(), cache.jobs(), [&](std::size_t i) {
    values[i] = clique_profile(corpus[i]).total;
    accepted[i] = is_total_extremal(corpus[i], delta).is_extremal ? 1 : 0;
  });
  finish_report(r, corpus, values, accepted);

  // tie rule: the pendant/K_2 swap gives a second achiever exactly at s=1
  const std::size_t expected = decompose(m, delta).s == 1 ? 2 : 1;
  if (r.argmax.size() != expected) r.membership_agreement = false;
  r.elapsed_ms = ms_since(start);
  return r;
}

VerificationReport verify_kk(long long m, int t, CorpusCache& cache) {
  const auto start = Clock::now();
  VerificationReport r;
  r.m = m;
  r.t = t;
  r.formula_value = colex_kt(m, t);

  const auto corpus = cache.level(m, -1);
  const ColexDecomposition d = colex_decompose(m);
  const CanonicalForm colex_cert =
      d.s >= t - 1 ? canonical_form(build_colex(m)) : CanonicalForm{};

  std::vector<Count> values(corpus.size());
  std::vector<char> accepted(corpus.size());
  parallel_for(corpus.size(), cache.jobs(), [&](std::size_t i) {
    values[i] = count_kt(corpus[i], t);
    bool in_family;
    if (d.r < t) {
      in_family = true;
    } else if (d.s >= t - 1) {
      in_family = canonical_form(corpus[i]) == colex_cert;
    } else {
      in_family = has_clique(corpus[i], static_cast<int>(d.r));
    }
    accepted[i] = in_family ? 1 : 0;
  });
  finish_report(r, corpus, values, accepted);
  r.elapsed_ms = ms_since(start);
  return r;
}

nlohmann::ordered_json report_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["m"] = r.m;
  if (r.delta) {
    j["delta"] = *r.delta;
  } else {
    j["delta"] = nullptr;
  }
  if (r.t) {
    j["t"] = *r.t;
  } else {
    j["t"] = nullptr;
  }
  j["oracle_max"] = r.oracle_max.get_str();
  j["formula"] = r.formula_value.get_str();
  j["match"] = r.match;
  nlohmann::ordered_json certs = nlohmann::ordered_json::array();
  for (const CanonicalForm& c : r.argmax) certs.push_back(c.bytes);
  j["argmax"] = std::move(certs);
  j["membership_agreement"] = r.membership_agreement;
  j["corpus_size"] = r.corpus_size;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace extremal
