#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpow/bounds.hpp"
#include "qpow/graph.hpp"
#include "qpow/invariants.hpp"
#include "qpow/spectra.hpp"

namespace qpow {

/// Absolute tolerance for comparisons against a bound of the given magnitude.
double equality_tolerance(double bound_value) noexcept;

/// Strict-inequality margin used by the edge-monotonicity check.
inline constexpr double kStrictMargin = 1e-9;
/// Entrywise tolerance for spectrum comparisons.
inline constexpr double kSpectrumTolerance = 1e-8;

struct BoundQuery {
  BoundId id;
  /// Connectivity parameter, required by the kappa-bounded families.
  std::optional<int> k;
};

/// One bound evaluated on one graph.
struct BoundResult {
  std::string bound_id;
  std::string graph;  // graph6
  double alpha = 0.0;
  std::optional<int> k;
  std::string direction;  // "upper" | "lower"
  double invariant_value = 0.0;
  double bound_value = 0.0;
  /// Sign-adjusted so that >= -tol_eq means the inequality holds.
  double slack = 0.0;
  bool equality = false;
  bool satisfied = false;
  /// Q-cospectral with the claimed extremal graph, with equal degree sequence and size.
  bool extremal_match = false;
  bool applicable = false;
  std::string reason;

  /// Equality occurs exactly when the graph matches the extremal description.
  bool equality_consistent() const noexcept { return equality == extremal_match; }
  bool passed() const noexcept { return applicable && satisfied && equality_consistent(); }
};

/// Signature used to decide "same as the extremal graph" without an isomorphism test.
struct SpectralSignature {
  Spectrum q;
  std::vector<int> sorted_degrees;
  int m = 0;

  static SpectralSignature of(const Graph& g, EigenOptions options = {});
  static SpectralSignature of(const Graph& g, const Spectrum& q);
  bool matches(const SpectralSignature& other) const noexcept;
};

/// Per-graph data shared across many bound evaluations.
struct GraphFacts {
  Graph graph;
  std::string graph6;
  SpectralSignature signature;
  bool connected = false;
  bool bipartite = false;
  /// (r, s) with r <= s when connected and bipartite.
  std::optional<std::pair<int, int>> parts;
  /// Filled when a kappa-bounded family needs it.
  std::optional<int> kappa;

  const Spectrum& q() const noexcept { return signature.q; }

  static GraphFacts compute(const Graph& g, bool with_kappa, EigenOptions options = {});
};

/// Evaluates `query` at `alpha` on precomputed facts. `extremal` may be supplied to
/// avoid rebuilding the extremal graph's signature.
BoundResult evaluate_bound(const GraphFacts& facts, const BoundQuery& query, Alpha alpha,
                           const SpectralSignature* extremal = nullptr);

/// Evaluates a bound on g. Inapplicable combinations come back with applicable = false
/// and a reason; missing or out-of-range k throws GraphError.
BoundResult check_bound(const Graph& g, const BoundQuery& query, Alpha alpha);

struct InterlacingCheck {
  bool passed = false;
  Spectrum with_edge;
  Spectrum without_edge;
  /// sum q_i(G) - sum q_i(G - e); 2 in exact arithmetic.
  double trace_gap = 0.0;
  /// Largest amount by which any link of the chain is broken (<= 0 when it holds).
  double worst_violation = 0.0;
};

/// Checks 0 <= q_n(G-e) <= q_n(G) <= q_{n-1}(G-e) <= ... <= q_1(G-e) <= q_1(G) and the
/// trace gap of 2. Throws GraphError if e is not an edge.
InterlacingCheck check_interlacing(const Graph& g, Edge e);

struct EdgeMonotonicity {
  Edge edge;
  double with_edge = 0.0;
  double without_edge = 0.0;
  /// S(G) - S(G-e) for alpha > 0, S(G-e) - S(G) for alpha < 0.
  double margin = 0.0;
  bool holds = false;
  /// Whether the strict inequality is claimed for this edge. For alpha < 0 only edges
  /// with G and G-e connected and an unchanged non-zero eigenvalue count are asserted;
  /// the rest are recorded with `note`.
  bool asserted = false;
  std::string note;
};

struct MonotonicityCheck {
  double alpha = 0.0;
  std::vector<EdgeMonotonicity> edges;
  int asserted = 0;
  int recorded = 0;
  bool passed = false;
};

MonotonicityCheck check_edge_monotonicity(const Graph& g, Alpha alpha);

struct CospectralCheck {
  bool applicable = false;
  bool passed = false;
  double max_deviation = 0.0;
  Spectrum q;
  Spectrum l;
};

/// L- and Q-spectra agree entrywise for bipartite graphs.
CospectralCheck check_bipartite_cospectral(const Graph& g);

struct IdentityCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  bool passed = false;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool passed = false;
};

/// Grid on which the S_alpha / s_alpha interval relations are checked.
inline constexpr double kRelationAlphaGrid[] = {0.25, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0};
inline constexpr double kRelationTolerance = 1e-9;

/// Trace identities (S_1 = 2m, S_2 = s_2 = M_1 + 2m, E_L = S_2, IE = S_{1/2}) and the
/// interval relations between S_alpha and s_alpha.
IdentityReport check_identities(const Graph& g);

}  // namespace qpow
