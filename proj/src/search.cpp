#include "qpow/search.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <chrono>
#include <exception>
#include <map>
#include <mutex>
#include <string>
#include <tuple>

#include "qpow/connectivity.hpp"
#include "qpow/error.hpp"
#include "qpow/graph6.hpp"
#include "qpow/invariants.hpp"
#include "qpow/spectra.hpp"
#include "qpow/verify.hpp"

namespace qpow {

// ---------------------------------------------------------------------------
// Enumeration

GraphEnumerator::GraphEnumerator(int n, GraphFilter filter) : n_(n), filter_(filter) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw GraphError("internal enumeration supports 1 <= n <= " +
                     std::to_string(kMaxEnumerationOrder) + "; use a graph6 stream for n = " +
                     std::to_string(n));
  }
  if (filter.population == Population::kappa_at_most && (filter.k < 1 || filter.k > n - 1)) {
    throw GraphError("k = " + std::to_string(filter.k) + " outside [1, " + std::to_string(n - 1) +
                     "]");
  }
  if (filter.population == Population::connected_bipartite) {
    const std::uint64_t colourings = std::uint64_t{1} << (n - 1);
    offsets_.resize(colourings + 1, 0);
    for (std::uint64_t c = 0; c < colourings; ++c) {
      const int b = std::popcount(c);
      const int a = n - b;
      offsets_[c + 1] = offsets_[c] + (std::uint64_t{1} << (a * b));
    }
    total_ = offsets_.back();
  } else {
    total_ = std::uint64_t{1} << (n * (n - 1) / 2);
  }
}

Graph GraphEnumerator::build(std::uint64_t index) const {
  std::vector<Edge> edges;
  if (filter_.population == Population::connected_bipartite) {
    const auto it = std::upper_bound(offsets_.begin(), offsets_.end(), index);
    const std::uint64_t colouring = static_cast<std::uint64_t>(it - offsets_.begin() - 1);
    const std::uint64_t bits = index - offsets_[colouring];
    // Side B holds vertex v >= 1 iff bit (v - 1) of the colouring is set.
    const std::uint64_t side_b = colouring << 1;
    int bit = 0;
    for (int v = 1; v < n_; ++v) {
      for (int u = 0; u < v; ++u) {
        if (((side_b >> u) & 1U) == ((side_b >> v) & 1U)) continue;
        if ((bits >> bit) & 1U) edges.emplace_back(u, v);
        ++bit;
      }
    }
  } else {
    int bit = 0;
    for (int v = 1; v < n_; ++v) {
      for (int u = 0; u < v; ++u, ++bit) {
        if ((index >> bit) & 1U) edges.emplace_back(u, v);
      }
    }
  }
  return Graph(n_, edges);
}

bool GraphEnumerator::accept(const Graph& g) const {
  if (g.size() < g.order() - 1 || !is_connected(g)) return false;
  if (filter_.population == Population::kappa_at_most) {
    return vertex_connectivity(g).kappa <= filter_.k;
  }
  return true;
}

std::optional<Graph> GraphEnumerator::candidate(std::uint64_t index) const {
  if (index >= total_) return std::nullopt;
  Graph g = build(index);
  if (!accept(g)) return std::nullopt;
  return g;
}

std::optional<Graph> GraphEnumerator::next() {
  while (cursor_ < total_) {
    if (auto g = candidate(cursor_++)) return g;
  }
  return std::nullopt;
}

std::vector<Graph> enumerate_graphs(int n, GraphFilter filter) {
  GraphEnumerator e(n, filter);
  std::vector<Graph> out;
  while (auto g = e.next()) out.push_back(std::move(*g));
  return out;
}

std::uint64_t count_graphs(int n, GraphFilter filter) {
  GraphEnumerator e(n, filter);
  std::uint64_t count = 0;
  while (e.next()) ++count;
  return count;
}

// ---------------------------------------------------------------------------
// Scanning

namespace {

struct AlphaEntry {
  double alpha;
  BoundId id;
};

// (n, k or 0, alpha position)
using GroupKey = std::tuple<int, int, std::size_t>;

struct WitnessCandidate {
  double value = 0.0;
  double bound_value = 0.0;
  std::uint64_t ordinal = 0;
  std::uint64_t population = 0;
  bool extremal_match = false;
  std::string graph6;
  Graph graph = Graph::empty(1);
};

struct ScanPlan {
  const ScanConfig& config;
  std::vector<AlphaEntry> alphas;
  Population population;
  bool needs_kappa;
  // Claimed extremal graphs keyed by (bound id, n, k or r).
  std::map<std::tuple<BoundId, int, int>, SpectralSignature> extremal;
  // G(i) signatures keyed by (n, k, i).
  std::map<std::tuple<int, int, int>, SpectralSignature> gi;

  const SpectralSignature* extremal_for(BoundId id, int n, int k, const GraphFacts& facts) const {
    int key = k;
    if (id == BoundId::thm31_upper || id == BoundId::thm31_lower) {
      if (!facts.parts) return nullptr;
      key = facts.parts->first;
    }
    const auto it = extremal.find({id, n, key});
    return it == extremal.end() ? nullptr : &it->second;
  }
};

ScanPlan make_plan(const ScanConfig& config) {
  if (!is_bound_name(config.bound)) throw GraphError("unknown bound id '" + config.bound + "'");
  if (config.alpha_grid.empty()) throw GraphError("alpha grid is empty");
  if (config.min_n < 1 || config.max_n < config.min_n || config.max_n > kGraph6MaxOrder) {
    throw GraphError("invalid n range [" + std::to_string(config.min_n) + ", " +
                     std::to_string(config.max_n) + "]");
  }
  if (!config.input && config.max_n > kMaxEnumerationOrder) {
    throw GraphError("internal enumeration supports n <= " +
                     std::to_string(kMaxEnumerationOrder) + "; supply a graph6 stream");
  }

  ScanPlan plan{config, {}, Population::connected, false, {}, {}};
  for (std::size_t i = 0; i < config.alpha_grid.size(); ++i) {
    const double a = config.alpha_grid[i];
    if (a == 0.0) throw GraphError("alpha = 0 is not allowed");
    if (std::find(config.alpha_grid.begin(), config.alpha_grid.begin() + static_cast<long>(i), a) !=
        config.alpha_grid.begin() + static_cast<long>(i)) {
      throw GraphError("alpha grid repeats " + std::to_string(a));
    }
    const auto id = resolve_bound_id(config.bound, a);
    if (!id || !bound_spec(*id).alpha_valid(a)) {
      throw GraphError("alpha " + std::to_string(a) + " is outside the range of " + config.bound);
    }
    plan.alphas.push_back({a, *id});
  }
  plan.population = bound_spec(plan.alphas.front().id).population;
  plan.needs_kappa = plan.population == Population::kappa_at_most;
  if (plan.needs_kappa && config.k && *config.k < 1) {
    throw GraphError("k must be positive");
  }

  for (int n = std::max(2, config.min_n); n <= config.max_n; ++n) {
    for (const auto& entry : plan.alphas) {
      const BoundId id = entry.id;
      switch (bound_spec(id).population) {
        case Population::connected_bipartite:
          if (id == BoundId::thm31_upper || id == BoundId::thm31_lower) {
            for (int r = 1; r <= n / 2; ++r) {
              plan.extremal.try_emplace({id, n, r},
                                        SpectralSignature::of(complete_bipartite(r, n - r)));
            }
          } else {
            plan.extremal.try_emplace({id, n, 0}, SpectralSignature::of(extremal_graph(id, {n})));
          }
          break;
        case Population::connected:
          plan.extremal.try_emplace({id, n, 0}, SpectralSignature::of(extremal_graph(id, {n})));
          break;
        case Population::kappa_at_most:
          for (int k = 1; k <= n - 1; ++k) {
            plan.extremal.try_emplace({id, n, k}, SpectralSignature::of(construct_gi(n, k, 1)));
          }
          break;
      }
    }
    if (plan.needs_kappa) {
      for (int k = 1; k <= n - 1; ++k) {
        for (int i = 1; i <= gi_max_index(n, k); ++i) {
          plan.gi.try_emplace({n, k, i}, SpectralSignature::of(construct_gi(n, k, i)));
        }
      }
    }
  }
  return plan;
}

template <typename Record, typename Key>
void keep_first(std::vector<Record>& records, std::size_t limit, Key key) {
  std::sort(records.begin(), records.end(),
            [&](const Record& a, const Record& b) { return key(a) < key(b); });
  if (records.size() > limit) records.resize(limit);
}

auto violation_key(const ViolationRecord& v) {
  return std::make_tuple(v.ordinal, v.k.value_or(0), v.alpha);
}

auto mismatch_key(const EqualityMismatch& m) {
  return std::make_tuple(m.ordinal, m.k.value_or(0), m.alpha);
}

bool prefer(Direction d, double value, std::uint64_t ordinal, const WitnessCandidate& current) {
  if (value != current.value) {
    return d == Direction::upper ? value > current.value : value < current.value;
  }
  return ordinal < current.ordinal;
}

class Accumulator {
 public:
  explicit Accumulator(const ScanPlan& plan)
      : plan_(plan), per_n_(static_cast<std::size_t>(plan.config.max_n) + 1, 0) {}

  void visit(const Graph& g, std::uint64_t ordinal) {
    const ScanConfig& config = plan_.config;
    const int n = g.order();
    if (n < config.min_n || n > config.max_n) return;
    if (!is_connected(g)) return;
    if (plan_.population == Population::connected_bipartite && !is_bipartite(g)) return;
    if (plan_.needs_kappa && config.k && *config.k > n - 1) return;

    const GraphFacts facts = GraphFacts::compute(g, plan_.needs_kappa);
    if (plan_.needs_kappa && config.k && *facts.kappa > *config.k) return;

    ++per_n_[static_cast<std::size_t>(n)];
    if (n < 2) return;

    std::vector<int> ks;
    if (plan_.needs_kappa) {
      if (config.k) {
        ks.push_back(*config.k);
      } else {
        for (int k = std::max(1, *facts.kappa); k <= n - 1; ++k) ks.push_back(k);
      }
    } else {
      ks.push_back(0);
    }

    for (std::size_t a = 0; a < plan_.alphas.size(); ++a) {
      const AlphaEntry& entry = plan_.alphas[a];
      const Alpha alpha(entry.alpha);
      for (int k : ks) {
        const std::optional<int> qk = plan_.needs_kappa ? std::optional<int>(k) : std::nullopt;
        const BoundQuery query{entry.id, qk};
        const BoundResult r =
            evaluate_bound(facts, query, alpha, plan_.extremal_for(entry.id, n, k, facts));
        ++evaluations_;
        if (!r.applicable) {
          ++inapplicable_;
          continue;
        }
        if (r.equality) ++equality_cases_;
        if (!r.equality_consistent()) record_mismatch(r, n, ordinal);
        if (!r.satisfied) reverify(g, query, alpha, ordinal, facts);
        update_witness({n, k, a}, r, g, ordinal);
      }
    }
  }

  void merge(Accumulator&& other) {
    for (std::size_t i = 0; i < per_n_.size(); ++i) per_n_[i] += other.per_n_[i];
    evaluations_ += other.evaluations_;
    inapplicable_ += other.inapplicable_;
    equality_cases_ += other.equality_cases_;
    violation_count_ += other.violation_count_;
    spurious_ += other.spurious_;
    mismatch_count_ += other.mismatch_count_;
    for (auto& v : other.violations_) violations_.push_back(std::move(v));
    for (auto& m : other.mismatches_) mismatches_.push_back(std::move(m));
    trim();
    for (auto& [key, group] : other.groups_) {
      auto [it, inserted] = groups_.try_emplace(key, group);
      if (inserted) continue;
      ViolationGroup& mine = it->second;
      mine.count += group.count;
      if (group.worst_margin < mine.worst_margin ||
          (group.worst_margin == mine.worst_margin && group.worst_ordinal < mine.worst_ordinal)) {
        mine.worst_margin = group.worst_margin;
        mine.worst_graph6 = group.worst_graph6;
        mine.worst_ordinal = group.worst_ordinal;
      }
    }
    for (auto& [key, cand] : other.witnesses_) {
      auto [it, inserted] = witnesses_.try_emplace(key, cand);
      if (inserted) continue;
      const std::uint64_t population = it->second.population + cand.population;
      if (prefer(direction(key), cand.value, cand.ordinal, it->second)) it->second = cand;
      it->second.population = population;
    }
  }

  ScanReport finish() {
    const ScanConfig& config = plan_.config;
    ScanReport report;
    report.bound = config.bound;
    report.min_n = config.min_n;
    report.max_n = config.max_n;
    report.k = config.k;
    report.alpha_grid = config.alpha_grid;
    report.source = config.source_label;
    report.graphs_per_n.assign(per_n_.begin() + config.min_n, per_n_.end());
    for (auto c : report.graphs_per_n) report.graphs_scanned += c;
    report.evaluations = evaluations_;
    report.inapplicable = inapplicable_;
    report.equality_cases = equality_cases_;
    report.violation_count = violation_count_;
    report.spurious_violations_dropped = spurious_;
    report.equality_mismatch_count = mismatch_count_;
    keep_first(violations_, config.max_records, violation_key);
    keep_first(mismatches_, config.max_records, mismatch_key);
    report.violations = std::move(violations_);
    report.equality_mismatches = std::move(mismatches_);
    for (auto& [key, group] : groups_) report.violation_groups.push_back(group);

    for (auto& [key, cand] : witnesses_) {
      const auto& [n, k, a] = key;
      const AlphaEntry& entry = plan_.alphas[a];
      ExtremalWitness w;
      w.n = n;
      if (plan_.needs_kappa) w.k = k;
      w.alpha = entry.alpha;
      w.bound_id = std::string(bound_spec(entry.id).name);
      w.direction = direction(key) == Direction::upper ? "upper" : "lower";
      w.graph6 = cand.graph6;
      w.value = cand.value;
      w.bound_value = cand.bound_value;
      w.population = cand.population;
      w.extremal_match = cand.extremal_match;
      w.ordinal = cand.ordinal;
      if (plan_.needs_kappa) {
        const SpectralSignature sig = SpectralSignature::of(cand.graph);
        for (int i = 1; i <= gi_max_index(n, k); ++i) {
          if (sig.matches(plan_.gi.at({n, k, i}))) {
            w.gi_index = i;
            break;
          }
        }
      }
      report.extremal_witnesses.push_back(std::move(w));
    }
    return report;
  }

 private:
  Direction direction(const GroupKey& key) const {
    const AlphaEntry& entry = plan_.alphas[std::get<2>(key)];
    return bound_spec(entry.id).direction(entry.alpha);
  }

  void trim() {
    const std::size_t limit = plan_.config.max_records;
    if (violations_.size() > 2 * limit) keep_first(violations_, limit, violation_key);
    if (mismatches_.size() > 2 * limit) keep_first(mismatches_, limit, mismatch_key);
  }

  void record_mismatch(const BoundResult& r, int n, std::uint64_t ordinal) {
    ++mismatch_count_;
    mismatches_.push_back({r.graph, n, r.k, r.alpha, r.bound_id, r.slack, r.equality,
                           r.extremal_match, ordinal});
    trim();
  }

  // Recompute at tightened precision with exhaustive kappa before believing a failure.
  void reverify(const Graph& g, const BoundQuery& query, Alpha alpha, std::uint64_t ordinal,
                const GraphFacts& facts) {
    GraphFacts tight = GraphFacts::compute(g, false, kTightEigenOptions);
    if (plan_.needs_kappa) tight.kappa = vertex_connectivity_exhaustive(g);
    const BoundResult r = evaluate_bound(
        tight, query, alpha, plan_.extremal_for(query.id, g.order(), query.k.value_or(0), facts));
    if (!r.applicable || r.satisfied) {
      ++spurious_;
      return;
    }
    ++violation_count_;
    const int n = g.order();
    violations_.push_back({r.graph, n, r.k, r.alpha, r.bound_id, r.invariant_value,
                           r.bound_value, r.slack, true, ordinal});
    trim();

    std::size_t a = 0;
    while (plan_.alphas[a].alpha != alpha.value()) ++a;
    const GroupKey key{n, query.k.value_or(0), a};
    auto [it, inserted] = groups_.try_emplace(
        key, ViolationGroup{n, r.k, r.alpha, r.bound_id, 0, r.slack, r.graph, ordinal});
    ViolationGroup& group = it->second;
    ++group.count;
    if (!inserted && (r.slack < group.worst_margin ||
                      (r.slack == group.worst_margin && ordinal < group.worst_ordinal))) {
      group.worst_margin = r.slack;
      group.worst_graph6 = r.graph;
      group.worst_ordinal = ordinal;
    }
  }

  void update_witness(const GroupKey& key, const BoundResult& r, const Graph& g,
                      std::uint64_t ordinal) {
    auto [it, inserted] = witnesses_.try_emplace(key);
    WitnessCandidate& cand = it->second;
    ++cand.population;
    if (inserted || prefer(direction(key), r.invariant_value, ordinal, cand)) {
      cand.value = r.invariant_value;
      cand.bound_value = r.bound_value;
      cand.ordinal = ordinal;
      cand.extremal_match = r.extremal_match;
      cand.graph6 = r.graph;
      cand.graph = g;
    }
  }

  const ScanPlan& plan_;
  std::vector<std::uint64_t> per_n_;
  std::uint64_t evaluations_ = 0;
  std::uint64_t inapplicable_ = 0;
  std::uint64_t equality_cases_ = 0;
  std::uint64_t violation_count_ = 0;
  std::uint64_t spurious_ = 0;
  std::uint64_t mismatch_count_ = 0;
  std::vector<ViolationRecord> violations_;
  std::vector<EqualityMismatch> mismatches_;
  std::map<GroupKey, ViolationGroup> groups_;
  std::map<GroupKey, WitnessCandidate> witnesses_;
};

GraphFilter enumeration_filter(const ScanPlan& plan, int n) {
  GraphFilter filter{plan.population, 0};
  if (plan.needs_kappa) {
    if (plan.config.k) {
      filter.k = *plan.config.k;
    } else {
      filter.population = Population::connected;
    }
  }
  (void)n;
  return filter;
}

// Calls visit(graph, ordinal) for every candidate, in order.
template <typename Visit>
void for_each_candidate_serial(const ScanPlan& plan, Visit&& visit) {
  const ScanConfig& config = plan.config;
  if (config.input) {
    for (std::size_t i = 0; i < config.input->size(); ++i) visit((*config.input)[i], i);
    return;
  }
  std::uint64_t base = 0;
  for (int n = config.min_n; n <= config.max_n; ++n) {
    if (plan.needs_kappa && config.k && *config.k > n - 1) continue;
    // The enumerator's own filter is bypassed; Accumulator::visit applies the family test.
    GraphFilter filter = enumeration_filter(plan, n);
    if (filter.population == Population::kappa_at_most) filter.population = Population::connected;
    const GraphEnumerator e(n, filter);
    for (std::uint64_t i = 0; i < e.candidate_count(); ++i) {
      if (auto g = e.candidate(i)) visit(*g, base + i);
    }
    base += e.candidate_count();
  }
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ScanReport scan_serial(const ScanConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const ScanPlan plan = make_plan(config);
  Accumulator acc(plan);
  for_each_candidate_serial(plan, [&](const Graph& g, std::uint64_t ordinal) { acc.visit(g, ordinal); });
  ScanReport report = acc.finish();
  report.wall_time_seconds = seconds_since(start);
  return report;
}

ScanReport scan(const ScanConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const ScanPlan plan = make_plan(config);
  const int threads = config.threads > 0 ? config.threads : omp_get_max_threads();

  // Work list: (enumerator or input, ordinal base, count).
  struct Block {
    std::optional<GraphEnumerator> enumerator;
    std::uint64_t base = 0;
    std::uint64_t count = 0;
  };
  std::vector<Block> blocks;
  if (config.input) {
    blocks.push_back({std::nullopt, 0, config.input->size()});
  } else {
    std::uint64_t base = 0;
    for (int n = config.min_n; n <= config.max_n; ++n) {
      if (plan.needs_kappa && config.k && *config.k > n - 1) continue;
      GraphFilter filter = enumeration_filter(plan, n);
      if (filter.population == Population::kappa_at_most) filter.population = Population::connected;
      GraphEnumerator e(n, filter);
      const std::uint64_t count = e.candidate_count();
      blocks.push_back({std::move(e), base, count});
      base += count;
    }
  }

  Accumulator total(plan);
  std::exception_ptr failure;
  std::uint64_t failure_ordinal = ~std::uint64_t{0};
  std::mutex merge_mutex;

  for (const Block& block : blocks) {
#pragma omp parallel num_threads(threads)
    {
      Accumulator local(plan);
      std::exception_ptr local_failure;
      std::uint64_t local_failure_ordinal = ~std::uint64_t{0};
      const auto count = static_cast<std::int64_t>(block.count);
#pragma omp for schedule(dynamic, 1024) nowait
      for (std::int64_t i = 0; i < count; ++i) {
        const auto index = static_cast<std::uint64_t>(i);
        const std::uint64_t ordinal = block.base + index;
        if (local_failure) continue;
        try {
          if (block.enumerator) {
            if (auto g = block.enumerator->candidate(index)) local.visit(*g, ordinal);
          } else {
            local.visit((*config.input)[index], ordinal);
          }
        } catch (...) {
          local_failure = std::current_exception();
          local_failure_ordinal = ordinal;
        }
      }
      std::lock_guard lock(merge_mutex);
      if (local_failure && local_failure_ordinal < failure_ordinal) {
        failure = local_failure;
        failure_ordinal = local_failure_ordinal;
      }
      total.merge(std::move(local));
    }
    if (failure) std::rethrow_exception(failure);
  }

  ScanReport report = total.finish();
  report.wall_time_seconds = seconds_since(start);
  return report;
}

std::vector<RankedGraph> extremal_table(const std::string& bound, int n, double alpha,
                                        std::optional<int> k, std::size_t top) {
  const auto id = resolve_bound_id(bound, alpha);
  if (!id || !bound_spec(*id).alpha_valid(alpha)) {
    throw GraphError("alpha " + std::to_string(alpha) + " is outside the range of " + bound);
  }
  const BoundSpec& spec = bound_spec(*id);
  GraphFilter filter{spec.population, 0};
  if (spec.needs_k()) {
    if (!k) throw GraphError(std::string(spec.name) + " needs a connectivity bound k");
    filter.k = *k;
  }
  const bool upper = spec.direction(alpha) == Direction::upper;
  const Alpha a(alpha);

  GraphEnumerator e(n, filter);
  std::vector<std::pair<double, std::uint64_t>> scored;
  for (std::uint64_t i = 0; i < e.candidate_count(); ++i) {
    auto g = e.candidate(i);
    if (!g) continue;
    if (*id == BoundId::thm41_lower && is_bipartite(*g) && g->size() != n * (n - 1) / 2) continue;
    scored.emplace_back(nonzero_power_sum(q_spectrum(*g), a), i);
  }
  const auto better = [upper](const auto& x, const auto& y) {
    if (x.first != y.first) return upper ? x.first > y.first : x.first < y.first;
    return x.second < y.second;
  };
  const std::size_t keep = std::min(top, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<long>(keep), scored.end(), better);

  std::vector<RankedGraph> out;
  for (std::size_t i = 0; i < keep; ++i) {
    out.push_back({emit_graph6(*e.candidate(scored[i].second)), scored[i].first, scored[i].second});
  }
  return out;
}

}  // namespace qpow
