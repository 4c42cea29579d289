#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qpow/bounds.hpp"
#include "qpow/connectivity.hpp"
#include "qpow/error.hpp"
#include "qpow/format.hpp"
#include "qpow/graph.hpp"
#include "qpow/graph6.hpp"
#include "qpow/invariants.hpp"
#include "qpow/report.hpp"
#include "qpow/search.hpp"
#include "qpow/spectra.hpp"
#include "qpow/verify.hpp"

namespace qpow::cli {
namespace {

// Raised for well-formed requests the library cannot answer (wrong family, bad range).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph6;
  std::string matrix = "Q";
  std::string name;
  std::optional<double> alpha;
  std::string emit;
  std::vector<int> construct_args;
  std::string id;
  std::optional<int> n;
  std::optional<int> k;
  std::optional<int> r;
  std::optional<int> s;
  int min_n = 2;
  int max_n = 0;
  std::vector<double> alpha_grid;
  std::string input;
  std::string format = "json";
  std::string violations_csv;
  std::size_t max_records = 1000;
  bool redact_timing = false;
};

int thread_limit() {
  if (const char* env = std::getenv("QPOW_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t > 0) return t;
    } catch (const std::exception&) {
    }
    throw UsageError(std::string("QPOW_THREADS must be a positive integer, got '") + env + "'");
  }
  return 0;
}

double require_alpha(const Options& o) {
  if (!o.alpha) throw UsageError("--alpha is required");
  return *o.alpha;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const Graph g = parse_graph6(o.graph6);
  MatrixKind kind = MatrixKind::signless_laplacian;
  if (o.matrix == "L") kind = MatrixKind::laplacian;
  if (o.matrix == "A") kind = MatrixKind::adjacency;
  const Spectrum spec = spectrum(g, kind);
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (i) out << ' ';
    out << format_number(spec.is_zero(spec[i]) ? 0.0 : spec[i]);
  }
  out << '\n';
  return kExitOk;
}

int cmd_invariant(const Options& o, std::ostream& out) {
  const Graph g = parse_graph6(o.graph6);
  double value = 0.0;
  if (o.name == "Salpha") {
    value = signless_power_sum(g, Alpha(require_alpha(o)));
  } else if (o.name == "salpha") {
    value = laplacian_power_sum(g, Alpha(require_alpha(o)));
  } else if (o.name == "IE") {
    value = incidence_energy(g);
  } else if (o.name == "LEL") {
    value = laplacian_energy_like(g);
  } else if (o.name == "Kf") {
    value = kirchhoff_index(g);
  } else if (o.name == "EL") {
    value = laplacian_energy(g);
  } else if (o.name == "E") {
    value = graph_energy(g);
  } else {
    value = first_zagreb(g);
  }
  out << format_number(value) << '\n';
  return kExitOk;
}

int cmd_construct(const std::string& kind, const Options& o, std::ostream& out) {
  const auto& a = o.construct_args;
  const std::size_t want = kind == "complete" ? 1 : kind == "bipartite" ? 2 : 3;
  if (a.size() != want) {
    throw UsageError("construct " + kind + " takes " + std::to_string(want) + " integer(s)");
  }
  Graph g = kind == "complete"    ? complete(a[0])
            : kind == "bipartite" ? complete_bipartite(a[0], a[1])
                                  : construct_gi(a[0], a[1], a[2]);
  if (o.emit == "graph6") {
    out << emit_graph6(g) << '\n';
    return kExitOk;
  }
  out << "n " << g.order() << " m " << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.first << ' ' << e.second << '\n';
  return kExitOk;
}

BoundId resolve(const std::string& name, double alpha) {
  if (!is_bound_name(name)) throw UsageError("unknown bound id '" + name + "'");
  const auto id = resolve_bound_id(name, alpha);
  if (!id || !bound_spec(*id).alpha_valid(alpha)) {
    std::string range = id ? std::string(bound_spec(*id).applicability) : std::string();
    throw UsageError("alpha = " + format_number(alpha) + " is outside the range of " + name +
                     (range.empty() ? "" : " (" + range + ")"));
  }
  return *id;
}

int cmd_bounds(const Options& o, std::ostream& out) {
  const double alpha = require_alpha(o);
  const BoundId id = resolve(o.id, alpha);
  const BoundSpec& spec = bound_spec(id);
  BoundParameters p;
  if (spec.population == Population::connected_bipartite &&
      (id == BoundId::thm31_upper || id == BoundId::thm31_lower)) {
    if (!o.r || !o.s) throw UsageError(std::string(spec.name) + " needs --r and --s");
    if (*o.r < 1 || *o.s < 1) throw UsageError("--r and --s must be positive");
    p.r = *o.r;
    p.s = *o.s;
    p.n = *o.r + *o.s;
    if (o.n && *o.n != p.n) throw UsageError("--n must equal r + s");
  } else {
    if (!o.n) throw UsageError(std::string(spec.name) + " needs --n");
    p.n = *o.n;
    if (p.n < 2) throw UsageError("--n must be at least 2");
  }
  if (spec.needs_k()) {
    if (!o.k) throw UsageError(std::string(spec.name) + " needs --k");
    if (*o.k < 1 || *o.k > p.n - 1) {
      throw UsageError("--k must lie in [1, " + std::to_string(p.n - 1) + "]");
    }
    p.k = *o.k;
  }
  out << format_number(bound_value(id, p, Alpha(alpha))) << '\n';
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const double alpha = o.alpha.value_or(1.0);
  const BoundId id = resolve(o.id, alpha);
  const Graph g = parse_graph6(o.graph6);
  std::optional<int> k = o.k;
  if (bound_spec(id).needs_k() && !k) {
    // Default to the tightest admissible k.
    k = std::max(1, vertex_connectivity(g).kappa);
    if (*k > g.order() - 1) throw UsageError("graph too small for a connectivity bound");
  }
  const BoundResult r = check_bound(g, {id, k}, Alpha(alpha));
  if (o.format == "table") {
    out << r.bound_id << " on " << r.graph << " at alpha " << format_number(r.alpha) << ": ";
    if (!r.applicable) {
      out << "inapplicable (" << r.reason << ")\n";
    } else {
      out << "invariant " << format_number(r.invariant_value) << ", bound "
          << format_number(r.bound_value) << ", slack " << format_number(r.slack)
          << (r.satisfied ? ", satisfied" : ", VIOLATED") << (r.equality ? ", equality" : "")
          << (r.extremal_match ? ", extremal" : "") << '\n';
    }
  } else {
    out << json_line(r) << '\n';
  }
  if (!r.applicable) {
    err << "inapplicable: " << r.reason << '\n';
    return kExitUsage;
  }
  return r.passed() ? kExitOk : kExitViolated;
}

std::vector<Graph> read_input(const std::string& path, std::istream& in) {
  std::ifstream file;
  std::istream* src = &in;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open " + path);
    src = &file;
  }
  std::vector<Graph> graphs;
  Graph6Reader reader(*src);
  while (auto rec = reader.next()) {
    if (!rec->ok()) throw rec->error();
    graphs.push_back(rec->graph());
  }
  return graphs;
}

int cmd_scan(const Options& o, std::ostream& out, std::istream& in) {
  ScanConfig config;
  config.bound = o.id;
  config.min_n = o.min_n;
  config.max_n = o.max_n;
  config.k = o.k;
  config.alpha_grid = o.alpha_grid;
  config.threads = thread_limit();
  config.max_records = o.max_records;
  if (!o.input.empty()) {
    config.input = read_input(o.input, in);
    config.source_label = o.input == "-" ? "stdin" : o.input;
  }
  for (double a : config.alpha_grid) resolve(o.id, a);

  const ScanReport report = scan(config);
  if (!o.violations_csv.empty()) {
    std::ofstream csv(o.violations_csv);
    if (!csv) throw UsageError("cannot write " + o.violations_csv);
    write_violations_csv(csv, report.violations);
  }
  if (o.format == "csv") {
    write_violations_csv(out, report.violations);
  } else if (o.format == "table") {
    write_scan_table(out, report);
  } else {
    out << to_json(report, o.redact_timing).dump(2) << '\n';
  }
  return report.violation_count > 0 ? kExitViolated : kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        std::istream& in) {
  Options o;
  CLI::App app{"Signless Laplacian power sums, spectral bounds and exhaustive scans", "qpow"};
  app.require_subcommand(1);

  auto* spectrum_cmd = app.add_subcommand("spectrum", "Eigenvalues of Q, L or A");
  spectrum_cmd->add_option("--graph6", o.graph6, "Graph in graph6")->required();
  spectrum_cmd->add_option("--matrix", o.matrix)->check(CLI::IsMember({"Q", "L", "A"}));

  auto* invariant_cmd = app.add_subcommand("invariant", "One spectral invariant");
  invariant_cmd->add_option("--graph6", o.graph6)->required();
  invariant_cmd->add_option("--name", o.name)
      ->required()
      ->check(CLI::IsMember({"Salpha", "salpha", "IE", "LEL", "Kf", "EL", "E", "M1"}));
  invariant_cmd->add_option("--alpha", o.alpha);

  auto* construct_cmd = app.add_subcommand("construct", "Build K_n, K_{r,s} or G(i)");
  construct_cmd->require_subcommand(1);
  construct_cmd->add_option("--emit", o.emit)->check(CLI::IsMember({"graph6"}));
  for (const char* kind : {"complete", "bipartite", "gi"}) {
    auto* sub = construct_cmd->add_subcommand(kind);
    sub->add_option("params", o.construct_args)->required();
    sub->fallthrough();
  }

  auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form bound value");
  bounds_cmd->add_option("--id", o.id)->required();
  bounds_cmd->add_option("--n", o.n);
  bounds_cmd->add_option("--k", o.k);
  bounds_cmd->add_option("--r", o.r);
  bounds_cmd->add_option("--s", o.s);
  bounds_cmd->add_option("--alpha", o.alpha)->required();

  auto* check_cmd = app.add_subcommand("check", "Evaluate a bound on one graph");
  check_cmd->add_option("--id", o.id)->required();
  check_cmd->add_option("--graph6", o.graph6)->required();
  check_cmd->add_option("--alpha", o.alpha);
  check_cmd->add_option("--k", o.k);
  check_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "table"}));

  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive scan for violations");
  scan_cmd->add_option("--id", o.id)->required();
  scan_cmd->add_option("--max-n", o.max_n)->required();
  scan_cmd->add_option("--min-n", o.min_n);
  scan_cmd->add_option("--alpha-grid", o.alpha_grid)->required()->delimiter(',');
  scan_cmd->add_option("--k", o.k);
  scan_cmd->add_option("--input", o.input, "graph6 file, or - for standard input");
  scan_cmd->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "table"}));
  scan_cmd->add_option("--violations-csv", o.violations_csv);
  scan_cmd->add_option("--max-records", o.max_records);
  scan_cmd->add_flag("--redact-timing", o.redact_timing, "Write wall time as null");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (spectrum_cmd->parsed()) return cmd_spectrum(o, out);
    if (invariant_cmd->parsed()) return cmd_invariant(o, out);
    if (construct_cmd->parsed()) {
      for (auto* sub : construct_cmd->get_subcommands()) return cmd_construct(sub->get_name(), o, out);
    }
    if (bounds_cmd->parsed()) return cmd_bounds(o, out);
    if (check_cmd->parsed()) return cmd_check(o, out, err);
    if (scan_cmd->parsed()) return cmd_scan(o, out, in);
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const GraphError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qpow::cli
