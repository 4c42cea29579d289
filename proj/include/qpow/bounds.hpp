#pragma once

#include <optional>
#include <span>
#include <string_view>

#include "qpow/graph.hpp"
#include "qpow/invariants.hpp"
#include "qpow/spectra.hpp"

namespace qpow {

enum class BoundId {
  thm31_upper,
  thm31_lower,
  thm32_upper,
  thm32_lower,
  thm41_upper,
  thm41_lower,
  thm43_upper,
  conj31_upper,
  conj44_lower,
};

/// Which side of the bound the invariant is claimed to lie on.
enum class Direction { upper, lower };

/// Graph population a bound quantifies over.
enum class Population { connected, connected_bipartite, kappa_at_most };

struct BoundSpec {
  BoundId id;
  std::string_view name;
  Population population;
  bool conjecture;
  /// Human-readable alpha range and graph family.
  std::string_view applicability;
  std::string_view extremal_description;

  bool alpha_valid(double alpha) const noexcept;
  /// Direction of the inequality for a valid alpha. conj44-lower is an upper bound
  /// for 0 < alpha < 1 and a lower bound for alpha < 0.
  Direction direction(double alpha) const noexcept;
  bool needs_k() const noexcept { return population == Population::kappa_at_most; }
};

const BoundSpec& bound_spec(BoundId id);
std::span<const BoundSpec> all_bound_specs();

/// Exact id lookup ("thm43-upper").
std::optional<BoundId> parse_bound_id(std::string_view name);

/// Exact ids, or a family name ("thm32", "conj44") resolved to the member whose alpha
/// range contains `alpha`. nullopt if the name is unknown or no member applies.
std::optional<BoundId> resolve_bound_id(std::string_view name, double alpha);

/// True if `name` is an exact id or a family name.
bool is_bound_name(std::string_view name);

/// multiplier * base^alpha under the convention that makes every closed form total:
/// a zero multiplier annihilates the term, and a zero base contributes nothing (for
/// alpha > 0 that is 0^alpha; for alpha < 0 the base is excluded like a zero eigenvalue).
double power_term(double multiplier, double base, Alpha alpha);

/// (r+s)^a + (r-1) s^a + (s-1) r^a, the power sum of K_{r,s}.
double thm31_bound(int r, int s, Alpha alpha);
/// thm31_bound(floor(n/2), ceil(n/2), alpha).
double thm32_bound(int n, Alpha alpha);
/// 2^a (n-1)^a + (n-1)(n-2)^a, the power sum of K_n.
double thm41_bound(int n, Alpha alpha);

/// k(n-2)^a + (n-k-2)(n-3)^a + q1^a + q3^a, where q1, q3 are the two simple
/// non-integral eigenvalues of Q(G(1)).
double b_alpha(int n, int k, Alpha alpha);

/// {2n-2, (n-2)^[n-1]}.
Spectrum complete_spectrum_closed_form(int n);
/// {r+s, r^[s-1], s^[r-1], 0}.
Spectrum complete_bipartite_spectrum_closed_form(int r, int s);
/// Q-spectrum of construct_gi(n, k, i) in closed form.
Spectrum gi_spectrum_closed_form(int n, int k, int i);

/// 2 * (edge bound) = b_1(n, k) = n^2 - 3n + 2k + 2.
long long twice_edge_bound(int n, int k);

/// b_2(n, k) expanded: n^3 - 4n^2 + (2k+5)n + k^2 - k - 2.
long long laplacian_energy_bound(int n, int k);
/// The misprinted expansion n^3 + 2n^2 + (2k+5)n + k^2 - k - 2, kept only to document
/// the discrepancy in reports.
long long laplacian_energy_bound_as_printed(int n, int k);
inline constexpr std::string_view kLaplacianEnergyPolynomial = "n^3-4n^2+(2k+5)n+k^2-k-2";
inline constexpr std::string_view kLaplacianEnergyPolynomialAsPrinted =
    "n^3+2n^2+(2k+5)n+k^2-k-2";

/// Shape parameters a bound value depends on. Unused fields are ignored.
struct BoundParameters {
  int n = 0;
  int k = 0;
  int r = 0;
  int s = 0;
};

/// The closed-form bound for `id` (no applicability gating beyond alpha != 0).
double bound_value(BoundId id, const BoundParameters& params, Alpha alpha);

/// The claimed equality graph for `id`.
Graph extremal_graph(BoundId id, const BoundParameters& params);

}  // namespace qpow
