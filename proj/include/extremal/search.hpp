#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "extremal/binom.hpp"
#include "extremal/graph.hpp"

#include "json.hpp"

namespace extremal {

/// Target class for exhaustive enumeration: all graphs with exactly m
/// edges, max degree <= max_degree (-1 = unbounded), minimum degree 1.
struct EnumerationSpec {
  long long m = 0;
  int max_degree = -1;
};

/// Levels of the edge-augmentation BFS, one chain per degree bound,
/// built lazily and kept for reuse across verification calls. Level m
/// holds one canonically labeled representative per isomorphism class,
/// sorted by certificate.
class CorpusCache {
 public:
  /// Hard ceiling on n = 2m <= 64 vertices; caps above 31 edges are
  /// rejected up front.
  static constexpr long long kMaxCap = 31;

  explicit CorpusCache(long long cap = 14, int jobs = 0);

  long long cap() const { return cap_; }
  void set_cap(long long cap);
  int jobs() const { return jobs_; }

  std::span<const Graph> level(long long m, int max_degree);

 private:
  void extend(int max_degree, long long target);

  long long cap_;
  int jobs_;
  std::map<int, std::vector<std::vector<Graph>>> chains_;
};

/// One-shot enumeration through a private cache; sorted by certificate.
std::vector<Graph> enumerate_graphs(const EnumerationSpec& spec, int jobs = 0);

/// Maximum count_kt over the (m, delta) class and every achiever's
/// certificate, sorted.
std::pair<Count, std::vector<CanonicalForm>> brute_max(long long m, int delta, int t,
                                                       CorpusCache& cache);

struct VerificationReport {
  long long m = 0;
  std::optional<int> delta;
  std::optional<int> t;
  Count oracle_max;
  Count formula_value;
  bool match = false;
  std::vector<CanonicalForm> argmax;
  bool membership_agreement = false;
  long long corpus_size = 0;
  long long elapsed_ms = 0;

  bool passed() const { return match && membership_agreement; }
};

/// Exhaustive check of the clique-count maximum under a degree bound:
/// oracle max vs extremal_value, oracle argmax vs the is_extremal set.
VerificationReport verify_main(long long m, int delta, int t, CorpusCache& cache);

/// Same for the total count: oracle vs total_extremal_value, argmax vs
/// is_total_extremal, and the tie-size rule (two achievers iff s=1).
VerificationReport verify_total(long long m, int delta, CorpusCache& cache);

/// Same for the unbounded-degree colex bound: oracle vs colex_kt and the
/// three-case achiever characterization.
VerificationReport verify_kk(long long m, int t, CorpusCache& cache);

/// Fixed-order JSON: m, delta, t, oracle_max, formula, match, argmax,
/// membership_agreement, corpus_size, elapsed_ms. Counts as decimal
/// strings; delta/t null when not applicable.
nlohmann::ordered_json report_json(const VerificationReport& report);

}  // namespace extremal
