#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qpow/bounds.hpp"
#include "qpow/graph.hpp"

namespace qpow {

/// Largest n the internal enumerator accepts; larger orders need an external stream.
inline constexpr int kMaxEnumerationOrder = 9;

struct GraphFilter {
  Population population = Population::connected;
  /// Used by Population::kappa_at_most.
  int k = 0;
};

/// Lazy enumeration of every labelled graph on n vertices passing a filter, each once.
///
/// The candidate space is indexed so that disjoint index ranges can be scanned
/// concurrently: all 2^(n(n-1)/2) edge sets for the connected families, and for
/// connected bipartite graphs every 2-colouring with vertex 0 on side A paired with
/// every subset of the cross pairs (a connected bipartite graph has exactly one such
/// colouring).
class GraphEnumerator {
 public:
  /// Throws GraphError unless 1 <= n <= kMaxEnumerationOrder, or if k is out of range.
  GraphEnumerator(int n, GraphFilter filter);

  std::optional<Graph> next();

  std::uint64_t candidate_count() const noexcept { return total_; }
  /// The candidate at `index` if it passes the filter.
  std::optional<Graph> candidate(std::uint64_t index) const;

 private:
  Graph build(std::uint64_t index) const;
  bool accept(const Graph& g) const;

  int n_;
  GraphFilter filter_;
  std::uint64_t total_ = 0;
  std::uint64_t cursor_ = 0;
  // Bipartite space: colouring c (bit v set = vertex v on side B, v >= 1) owns indices
  // [offsets_[c], offsets_[c + 1]).
  std::vector<std::uint64_t> offsets_;
};

std::vector<Graph> enumerate_graphs(int n, GraphFilter filter);
std::uint64_t count_graphs(int n, GraphFilter filter);

/// One reported failure of a claimed inequality, kept only after re-verification.
struct ViolationRecord {
  std::string graph6;
  int n = 0;
  std::optional<int> k;
  double alpha = 0.0;
  std::string bound_id;
  double invariant_value = 0.0;
  double bound_value = 0.0;
  /// Signed slack; negative.
  double margin = 0.0;
  /// Recomputed with the tightened eigensolver and exhaustive kappa.
  bool reverified = false;
  /// Position in the scan's input order, for deterministic ordering.
  std::uint64_t ordinal = 0;
};

/// Violation totals for one (n, k, alpha).
struct ViolationGroup {
  int n = 0;
  std::optional<int> k;
  double alpha = 0.0;
  std::string bound_id;
  std::uint64_t count = 0;
  double worst_margin = 0.0;
  std::string worst_graph6;
  std::uint64_t worst_ordinal = 0;
};

/// The graph pushing hardest against the bound for one (n, k, alpha): the maximiser for
/// an upper bound, the minimiser for a lower bound.
struct ExtremalWitness {
  int n = 0;
  std::optional<int> k;
  double alpha = 0.0;
  std::string bound_id;
  std::string direction;
  std::string graph6;
  double value = 0.0;
  double bound_value = 0.0;
  std::uint64_t population = 0;
  /// Same spectral signature as the claimed extremal graph.
  bool extremal_match = false;
  /// For the kappa-bounded families: the i with a matching G(i) signature, if any.
  std::optional<int> gi_index;
  std::uint64_t ordinal = 0;
};

/// Equality/extremal disagreement: equality at tolerance without a signature match or
/// vice versa.
struct EqualityMismatch {
  std::string graph6;
  int n = 0;
  std::optional<int> k;
  double alpha = 0.0;
  std::string bound_id;
  double slack = 0.0;
  bool equality = false;
  bool extremal_match = false;
  std::uint64_t ordinal = 0;
};

struct ScanConfig {
  /// Exact bound id or family name ("thm32", "conj44"), resolved per alpha.
  std::string bound;
  int min_n = 2;
  int max_n = 2;
  /// Fixed connectivity bound for the kappa families; nullopt scans every k in 1..n-1.
  std::optional<int> k;
  std::vector<double> alpha_grid;
  /// Graphs to scan instead of the internal enumeration (e.g. from a graph6 stream);
  /// only those with min_n <= n <= max_n are used.
  std::optional<std::vector<Graph>> input;
  std::string source_label = "internal";
  /// Worker threads for the parallel scan; 0 uses the OpenMP default.
  int threads = 0;
  /// How many violation and mismatch records to keep; totals are always complete.
  std::size_t max_records = 1000;
};

struct ScanReport {
  std::string bound;
  int min_n = 0;
  int max_n = 0;
  std::optional<int> k;
  std::vector<double> alpha_grid;
  std::string source;
  /// Graphs in the scanned population (passing the family filter), all n.
  std::uint64_t graphs_scanned = 0;
  std::vector<std::uint64_t> graphs_per_n;
  std::uint64_t evaluations = 0;
  std::uint64_t inapplicable = 0;
  std::uint64_t equality_cases = 0;
  std::uint64_t violation_count = 0;
  /// Candidates that passed at default precision on re-verification.
  std::uint64_t spurious_violations_dropped = 0;
  std::uint64_t equality_mismatch_count = 0;
  std::vector<ViolationRecord> violations;
  std::vector<ViolationGroup> violation_groups;
  std::vector<EqualityMismatch> equality_mismatches;
  std::vector<ExtremalWitness> extremal_witnesses;
  double wall_time_seconds = 0.0;
};

/// OpenMP-parallel scan. Produces the same report as scan_serial for any thread count.
ScanReport scan(const ScanConfig& config);

/// Single-threaded reference scan.
ScanReport scan_serial(const ScanConfig& config);

struct RankedGraph {
  std::string graph6;
  double value = 0.0;
  std::uint64_t ordinal = 0;
};

/// The `top` graphs of the bound's population on n vertices ranked by S_alpha: largest
/// first for an upper bound, smallest first for a lower bound. Ties keep enumeration
/// order.
std::vector<RankedGraph> extremal_table(const std::string& bound, int n, double alpha,
                                        std::optional<int> k, std::size_t top = 10);

}  // namespace qpow
