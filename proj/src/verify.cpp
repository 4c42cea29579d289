#include "qpow/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qpow/connectivity.hpp"
#include "qpow/error.hpp"
#include "qpow/format.hpp"
#include "qpow/graph6.hpp"

namespace qpow {

double equality_tolerance(double bound_value) noexcept {
  return 1e-7 * std::max(1.0, std::abs(bound_value));
}

GraphFacts GraphFacts::compute(const Graph& g, bool with_kappa, EigenOptions options) {
  GraphFacts facts{g, emit_graph6(g), SpectralSignature::of(g, options), false, false, {}, {}};
  facts.connected = is_connected(g);
  facts.bipartite = is_bipartite(g);
  if (facts.connected) facts.parts = bipartition(g);
  if (with_kappa) facts.kappa = vertex_connectivity(g).kappa;
  return facts;
}

SpectralSignature SpectralSignature::of(const Graph& g, EigenOptions options) {
  return of(g, q_spectrum(g, options));
}

SpectralSignature SpectralSignature::of(const Graph& g, const Spectrum& q) {
  SpectralSignature sig{q, degree_sequence(g), g.size()};
  std::sort(sig.sorted_degrees.begin(), sig.sorted_degrees.end());
  return sig;
}

bool SpectralSignature::matches(const SpectralSignature& other) const noexcept {
  return m == other.m && sorted_degrees == other.sorted_degrees &&
         q.max_deviation(other.q) <= kSpectrumTolerance;
}

namespace {

BoundResult inapplicable(BoundResult r, std::string reason) {
  r.applicable = false;
  r.reason = std::move(reason);
  return r;
}

}  // namespace

BoundResult evaluate_bound(const GraphFacts& facts, const BoundQuery& query, Alpha alpha,
                           const SpectralSignature* extremal) {
  const BoundSpec& spec = bound_spec(query.id);
  const Graph& g = facts.graph;
  const int n = g.order();

  BoundResult r;
  r.bound_id = std::string(spec.name);
  r.graph = facts.graph6;
  r.alpha = alpha.value();
  r.direction = spec.direction(alpha.value()) == Direction::upper ? "upper" : "lower";

  if (spec.needs_k()) {
    if (!query.k) throw GraphError(std::string(spec.name) + " needs a connectivity bound k");
    if (*query.k < 1 || *query.k > n - 1) {
      throw GraphError("k = " + std::to_string(*query.k) + " outside [1, " +
                       std::to_string(n - 1) + "]");
    }
    r.k = query.k;
  }
  if (!spec.alpha_valid(alpha.value())) {
    return inapplicable(std::move(r), "alpha outside the range of " + std::string(spec.name) +
                                          " (" + std::string(spec.applicability) + ")");
  }
  if (n < 2) return inapplicable(std::move(r), "needs at least 2 vertices");
  if (!facts.connected) return inapplicable(std::move(r), "graph is disconnected");

  BoundParameters params{n, query.k.value_or(0), 0, 0};
  switch (spec.population) {
    case Population::connected_bipartite:
      if (!facts.parts) return inapplicable(std::move(r), "graph is not bipartite");
      params.r = facts.parts->first;
      params.s = facts.parts->second;
      break;
    case Population::kappa_at_most: {
      const int kappa = facts.kappa ? *facts.kappa : vertex_connectivity(g).kappa;
      if (kappa > *query.k) {
        return inapplicable(std::move(r), "kappa(G) = " + std::to_string(kappa) + " exceeds k = " +
                                              std::to_string(*query.k));
      }
      break;
    }
    case Population::connected:
      if (query.id == BoundId::thm41_lower && facts.bipartite &&
          g.size() != n * (n - 1) / 2) {
        return inapplicable(std::move(r),
                            "bipartite graph: its zero Q-eigenvalue drops out of the sum");
      }
      break;
  }

  r.applicable = true;
  r.invariant_value = nonzero_power_sum(facts.q(), alpha);
  r.bound_value = bound_value(query.id, params, alpha);
  r.slack = r.direction == "upper" ? r.bound_value - r.invariant_value
                                   : r.invariant_value - r.bound_value;
  const double tol = equality_tolerance(r.bound_value);
  r.equality = std::abs(r.slack) <= tol;
  r.satisfied = r.slack >= -tol;

  if (extremal != nullptr) {
    r.extremal_match = facts.signature.matches(*extremal);
  } else {
    r.extremal_match =
        facts.signature.matches(SpectralSignature::of(extremal_graph(query.id, params)));
  }
  return r;
}

BoundResult check_bound(const Graph& g, const BoundQuery& query, Alpha alpha) {
  const bool with_kappa = bound_spec(query.id).needs_k();
  return evaluate_bound(GraphFacts::compute(g, with_kappa), query, alpha);
}

InterlacingCheck check_interlacing(const Graph& g, Edge e) {
  const Graph minus = g.without_edge(e);
  InterlacingCheck out;
  out.with_edge = q_spectrum(g);
  out.without_edge = q_spectrum(minus);
  const auto& big = out.with_edge;
  const auto& small = out.without_edge;
  const std::size_t n = big.size();

  double worst = -small[n - 1];
  for (std::size_t i = 0; i < n; ++i) {
    worst = std::max(worst, small[i] - big[i]);
    if (i + 1 < n) worst = std::max(worst, big[i + 1] - small[i]);
  }
  const auto total = [](const Spectrum& s) {
    return std::accumulate(s.values().begin(), s.values().end(), 0.0);
  };
  out.trace_gap = total(big) - total(small);
  out.worst_violation = worst;
  out.passed = worst <= kSpectrumTolerance && std::abs(out.trace_gap - 2.0) <= kSpectrumTolerance;
  return out;
}

MonotonicityCheck check_edge_monotonicity(const Graph& g, Alpha alpha) {
  MonotonicityCheck out;
  out.alpha = alpha.value();
  const Spectrum full = q_spectrum(g);
  const bool connected = is_connected(g);
  const bool full_has_nonzero = full.nonzero_count() > 0;
  const double full_sum = full_has_nonzero || !alpha.negative() ? nonzero_power_sum(full, alpha) : 0.0;

  for (const Edge& e : g.edges()) {
    const Graph minus = g.without_edge(e);
    const Spectrum reduced = q_spectrum(minus);
    EdgeMonotonicity rec;
    rec.edge = e;
    if (alpha.negative() && reduced.nonzero_count() == 0) {
      rec.note = "G-e has no non-zero Q-eigenvalue";
      out.edges.push_back(std::move(rec));
      ++out.recorded;
      continue;
    }
    rec.with_edge = full_sum;
    rec.without_edge = nonzero_power_sum(reduced, alpha);
    rec.margin = alpha.negative() ? rec.without_edge - rec.with_edge
                                  : rec.with_edge - rec.without_edge;
    rec.holds = rec.margin > kStrictMargin;
    if (!alpha.negative()) {
      rec.asserted = true;
    } else if (!connected || !is_connected(minus)) {
      rec.note = "G or G-e disconnected";
    } else if (full.nonzero_count() != reduced.nonzero_count()) {
      rec.note = "non-zero eigenvalue count changes from " +
                 std::to_string(full.nonzero_count()) + " to " +
                 std::to_string(reduced.nonzero_count());
    } else {
      rec.asserted = true;
    }
    (rec.asserted ? out.asserted : out.recorded) += 1;
    out.edges.push_back(std::move(rec));
  }
  out.passed = std::all_of(out.edges.begin(), out.edges.end(),
                           [](const EdgeMonotonicity& r) { return !r.asserted || r.holds; });
  return out;
}

CospectralCheck check_bipartite_cospectral(const Graph& g) {
  CospectralCheck out;
  if (!is_bipartite(g)) return out;
  out.applicable = true;
  out.q = q_spectrum(g);
  out.l = l_spectrum(g);
  out.max_deviation = out.q.max_deviation(out.l);
  out.passed = out.max_deviation <= kSpectrumTolerance;
  return out;
}

IdentityReport check_identities(const Graph& g) {
  IdentityReport out;
  const Spectrum q = q_spectrum(g);
  const Spectrum l = l_spectrum(g);
  const double two_m = 2.0 * g.size();
  const double m1 = first_zagreb(g);

  auto add = [&](std::string name, double lhs, double rhs, double tol) {
    out.checks.push_back({std::move(name), lhs, rhs, std::abs(lhs - rhs) <= tol});
  };
  const double s2_q = nonzero_power_sum(q, Alpha(2.0));
  add("S_1 = 2m", nonzero_power_sum(q, Alpha(1.0)), two_m, kSpectrumTolerance);
  add("S_2 = M1 + 2m", s2_q, m1 + two_m, kSpectrumTolerance);
  add("s_2 = M1 + 2m", nonzero_power_sum(l, Alpha(2.0)), m1 + two_m, kSpectrumTolerance);
  add("E_L = S_2", laplacian_energy(g), s2_q, kSpectrumTolerance);
  add("IE = S_1/2", incidence_energy(g), nonzero_power_sum(q, Alpha(0.5)), kSpectrumTolerance);

  for (double a : kRelationAlphaGrid) {
    const double big_s = nonzero_power_sum(q, Alpha(a));
    const double small_s = nonzero_power_sum(l, Alpha(a));
    const bool ge_side = (a > 0.0 && a <= 1.0) || (a >= 2.0 && a <= 3.0);
    const bool le_side = a >= 1.0 && a <= 2.0;
    bool ok = true;
    if (ge_side) ok = ok && big_s >= small_s - kRelationTolerance;
    if (le_side) ok = ok && big_s <= small_s + kRelationTolerance;
    std::string name = "S_a vs s_a at a=" + format_number(a);
    out.checks.push_back({std::move(name), big_s, small_s, ok});
  }
  out.passed = std::all_of(out.checks.begin(), out.checks.end(),
                           [](const IdentityCheck& c) { return c.passed; });
  return out;
}

}  // namespace qpow
