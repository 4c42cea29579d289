#include "qpow/report.hpp"

#include <cmath>
#include <ostream>
#include <string>

#include "qpow/bounds.hpp"
#include "qpow/format.hpp"
#include "qpow/graph.hpp"
#include "qpow/invariants.hpp"

namespace qpow {

nlohmann::json report_number(double value) {
  if (!std::isfinite(value)) return nullptr;
  return std::stod(format_number(value));
}

namespace {

nlohmann::json optional_int(const std::optional<int>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json to_json(const BoundResult& r) {
  nlohmann::json j;
  j["bound_id"] = r.bound_id;
  j["graph"] = r.graph;
  j["alpha"] = report_number(r.alpha);
  j["k"] = optional_int(r.k);
  j["direction"] = r.direction;
  j["invariant_value"] = report_number(r.invariant_value);
  j["bound_value"] = report_number(r.bound_value);
  j["slack"] = report_number(r.slack);
  j["equality"] = r.equality;
  j["satisfied"] = r.satisfied;
  j["extremal_match"] = r.extremal_match;
  j["applicable"] = r.applicable;
  j["reason"] = r.reason;
  return j;
}

std::string json_line(const BoundResult& result) { return to_json(result).dump(); }

nlohmann::json laplacian_energy_note() {
  // Both polynomials against the spectral value at the smallest case, G(1) = K_3.
  const int n = 3;
  const int k = 2;
  const double oracle = nonzero_power_sum(q_spectrum(construct_gi(n, k, 1)), Alpha(2.0));
  nlohmann::json j;
  j["invariant"] = "E_L(G(1)) = b_2(n,k)";
  j["polynomial_used"] = std::string(kLaplacianEnergyPolynomial);
  j["polynomial_as_printed"] = std::string(kLaplacianEnergyPolynomialAsPrinted);
  j["n"] = n;
  j["k"] = k;
  j["value_used"] = laplacian_energy_bound(n, k);
  j["value_as_printed"] = laplacian_energy_bound_as_printed(n, k);
  j["spectral_value"] = report_number(oracle);
  return j;
}

nlohmann::json to_json(const ScanReport& report, bool redact_timing) {
  nlohmann::json j;
  j["bound_id"] = report.bound;
  j["n_range"] = {report.min_n, report.max_n};
  j["k"] = optional_int(report.k);
  nlohmann::json grid = nlohmann::json::array();
  for (double a : report.alpha_grid) grid.push_back(report_number(a));
  j["alpha_grid"] = grid;
  j["source"] = report.source;
  j["graphs_scanned"] = report.graphs_scanned;
  nlohmann::json per_n = nlohmann::json::object();
  for (std::size_t i = 0; i < report.graphs_per_n.size(); ++i) {
    per_n[std::to_string(report.min_n + static_cast<int>(i))] = report.graphs_per_n[i];
  }
  j["graphs_per_n"] = per_n;
  j["evaluations"] = report.evaluations;
  j["inapplicable"] = report.inapplicable;
  j["equality_cases"] = report.equality_cases;
  j["violation_count"] = report.violation_count;
  j["spurious_violations_dropped"] = report.spurious_violations_dropped;
  j["equality_mismatch_count"] = report.equality_mismatch_count;

  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"graph6", v.graph6},
                          {"n", v.n},
                          {"k", optional_int(v.k)},
                          {"alpha", report_number(v.alpha)},
                          {"bound_id", v.bound_id},
                          {"invariant_value", report_number(v.invariant_value)},
                          {"bound_value", report_number(v.bound_value)},
                          {"margin", report_number(v.margin)},
                          {"reverified", v.reverified}});
  }
  j["violations"] = violations;
  j["violations_truncated"] = report.violations.size() < report.violation_count;

  nlohmann::json groups = nlohmann::json::array();
  for (const auto& g : report.violation_groups) {
    groups.push_back({{"n", g.n},
                      {"k", optional_int(g.k)},
                      {"alpha", report_number(g.alpha)},
                      {"bound_id", g.bound_id},
                      {"count", g.count},
                      {"worst_margin", report_number(g.worst_margin)},
                      {"worst_graph6", g.worst_graph6}});
  }
  j["violation_groups"] = groups;

  nlohmann::json mismatches = nlohmann::json::array();
  for (const auto& m : report.equality_mismatches) {
    mismatches.push_back({{"graph6", m.graph6},
                          {"n", m.n},
                          {"k", optional_int(m.k)},
                          {"alpha", report_number(m.alpha)},
                          {"bound_id", m.bound_id},
                          {"slack", report_number(m.slack)},
                          {"equality", m.equality},
                          {"extremal_match", m.extremal_match}});
  }
  j["equality_mismatches"] = mismatches;

  nlohmann::json witnesses = nlohmann::json::array();
  for (const auto& w : report.extremal_witnesses) {
    witnesses.push_back({{"n", w.n},
                         {"k", optional_int(w.k)},
                         {"alpha", report_number(w.alpha)},
                         {"bound_id", w.bound_id},
                         {"direction", w.direction},
                         {"graph6", w.graph6},
                         {"value", report_number(w.value)},
                         {"bound_value", report_number(w.bound_value)},
                         {"population", w.population},
                         {"extremal_match", w.extremal_match},
                         {"gi_index", optional_int(w.gi_index)}});
  }
  j["extremal_witnesses"] = witnesses;

  const auto family = resolve_bound_id(report.bound, report.alpha_grid.empty() ? 1.0
                                                                               : report.alpha_grid.front());
  if (family && bound_spec(*family).needs_k()) j["notes"] = {laplacian_energy_note()};
  j["wall_time_seconds"] = redact_timing ? nlohmann::json(nullptr)
                                         : report_number(report.wall_time_seconds);
  return j;
}

void write_violations_csv(std::ostream& out, std::span<const ViolationRecord> records) {
  out << kViolationCsvHeader << '\n';
  for (const auto& v : records) {
    out << v.graph6 << ',' << v.n << ',' << (v.k ? std::to_string(*v.k) : "") << ','
        << format_number(v.alpha) << ',' << v.bound_id << ',' << format_number(v.invariant_value)
        << ',' << format_number(v.bound_value) << ',' << format_number(v.margin) << '\n';
  }
}

void write_scan_table(std::ostream& out, const ScanReport& report) {
  out << "bound " << report.bound << ", n " << report.min_n << ".." << report.max_n;
  if (report.k) out << ", k " << *report.k;
  out << ", source " << report.source << '\n';
  out << "graphs " << report.graphs_scanned << ", evaluations " << report.evaluations
      << ", inapplicable " << report.inapplicable << ", equality " << report.equality_cases
      << ", violations " << report.violation_count << ", mismatches "
      << report.equality_mismatch_count << '\n';
  out << "n\tk\talpha\tdir\tvalue\tbound\tmatch\tgraph6\n";
  for (const auto& w : report.extremal_witnesses) {
    out << w.n << '\t' << (w.k ? std::to_string(*w.k) : "-") << '\t' << format_number(w.alpha)
        << '\t' << w.direction << '\t' << format_number(w.value) << '\t'
        << format_number(w.bound_value) << '\t' << (w.extremal_match ? "yes" : "no") << '\t'
        << w.graph6 << '\n';
  }
  for (const auto& g : report.violation_groups) {
    out << "violated: n " << g.n << (g.k ? ", k " + std::to_string(*g.k) : std::string())
        << ", alpha " << format_number(g.alpha) << ": " << g.count << " graphs, worst "
        << format_number(g.worst_margin) << " at " << g.worst_graph6 << '\n';
  }
}

}  // namespace qpow
