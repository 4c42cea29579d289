#include "qpow/bounds.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "qpow/error.hpp"

namespace qpow {

namespace {

constexpr std::array<BoundSpec, 9> kSpecs{{
    {BoundId::thm31_upper, "thm31-upper", Population::connected_bipartite, false,
     "alpha > 0; connected bipartite graph with parts r, s", "K_{r,s}"},
    {BoundId::thm31_lower, "thm31-lower", Population::connected_bipartite, false,
     "alpha < 0; connected bipartite graph with parts r, s", "K_{r,s}"},
    {BoundId::thm32_upper, "thm32-upper", Population::connected_bipartite, false,
     "0 < alpha <= 1; connected bipartite graph on n vertices",
     "K_{floor(n/2),ceil(n/2)}"},
    {BoundId::thm32_lower, "thm32-lower", Population::connected_bipartite, false,
     "alpha < 0; connected bipartite graph on n vertices", "K_{floor(n/2),ceil(n/2)}"},
    {BoundId::thm41_upper, "thm41-upper", Population::connected, false,
     "alpha > 0; connected graph on n vertices", "K_n"},
    {BoundId::thm41_lower, "thm41-lower", Population::connected, false,
     "alpha < 0; connected graph on n vertices without a zero Q-eigenvalue, or K_n", "K_n"},
    {BoundId::thm43_upper, "thm43-upper", Population::kappa_at_most, false,
     "alpha >= 1; connected graph on n vertices with kappa <= k", "K_k v (K_1 u K_{n-k-1})"},
    {BoundId::conj31_upper, "conj31-upper", Population::connected_bipartite, true,
     "alpha > 1; connected bipartite graph on n vertices", "K_{floor(n/2),ceil(n/2)}"},
    {BoundId::conj44_lower, "conj44-lower", Population::kappa_at_most, true,
     "alpha < 1 (upper side for 0 < alpha < 1, lower side for alpha < 0); connected graph "
     "with kappa <= k",
     "K_k v (K_1 u K_{n-k-1})"},
}};

struct FamilyAlias {
  std::string_view name;
  std::array<BoundId, 2> members;
};

constexpr std::array<FamilyAlias, 6> kFamilies{{
    {"thm31", {BoundId::thm31_upper, BoundId::thm31_lower}},
    {"thm32", {BoundId::thm32_upper, BoundId::thm32_lower}},
    {"thm41", {BoundId::thm41_upper, BoundId::thm41_lower}},
    {"thm43", {BoundId::thm43_upper, BoundId::thm43_upper}},
    {"conj31", {BoundId::conj31_upper, BoundId::conj31_upper}},
    {"conj44", {BoundId::conj44_lower, BoundId::conj44_lower}},
}};

void check_positive(int value, const char* what) {
  if (value < 1) throw GraphError(std::string(what) + " must be positive");
}

void check_nk(int n, int k) {
  if (n < 2 || k < 1 || k > n - 1) {
    throw GraphError("need 1 <= k <= n-1 with n >= 2, got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
  }
}

// Simple eigenvalues q1 >= q3 of Q(G(i)), from their sum 2n-4+k and exact integer
// product 2(k-2)(n-1) - 4i(k-n+i). Dividing the product by q1 avoids cancellation
// in q3 and makes it exactly 0 when G(i) is bipartite.
std::pair<double, double> gi_simple_pair(int n, int k, int i) {
  const double disc = static_cast<double>((k - 2 * n) * (k - 2 * n) + 16 * i * (k - n + i));
  const double q1 = n - 2 + k / 2.0 + 0.5 * std::sqrt(disc);
  const long long product = 2LL * (k - 2) * (n - 1) - 4LL * i * (k - n + i);
  return {q1, static_cast<double>(product) / q1};
}

}  // namespace

bool BoundSpec::alpha_valid(double alpha) const noexcept {
  if (alpha == 0.0 || !std::isfinite(alpha)) return false;
  switch (id) {
    case BoundId::thm31_upper:
    case BoundId::thm41_upper:
      return alpha > 0.0;
    case BoundId::thm31_lower:
    case BoundId::thm32_lower:
    case BoundId::thm41_lower:
      return alpha < 0.0;
    case BoundId::thm32_upper:
      return alpha > 0.0 && alpha <= 1.0;
    case BoundId::thm43_upper:
      return alpha >= 1.0;
    case BoundId::conj31_upper:
      return alpha > 1.0;
    case BoundId::conj44_lower:
      return alpha < 1.0;
  }
  return false;
}

Direction BoundSpec::direction(double alpha) const noexcept {
  switch (id) {
    case BoundId::thm31_lower:
    case BoundId::thm32_lower:
    case BoundId::thm41_lower:
      return Direction::lower;
    case BoundId::conj44_lower:
      return alpha < 0.0 ? Direction::lower : Direction::upper;
    default:
      return Direction::upper;
  }
}

const BoundSpec& bound_spec(BoundId id) { return kSpecs[static_cast<std::size_t>(id)]; }

std::span<const BoundSpec> all_bound_specs() { return kSpecs; }

std::optional<BoundId> parse_bound_id(std::string_view name) {
  for (const auto& spec : kSpecs) {
    if (spec.name == name) return spec.id;
  }
  return std::nullopt;
}

std::optional<BoundId> resolve_bound_id(std::string_view name, double alpha) {
  if (auto exact = parse_bound_id(name)) return exact;
  for (const auto& family : kFamilies) {
    if (family.name != name) continue;
    for (BoundId id : family.members) {
      if (bound_spec(id).alpha_valid(alpha)) return id;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

bool is_bound_name(std::string_view name) {
  if (parse_bound_id(name)) return true;
  for (const auto& family : kFamilies) {
    if (family.name == name) return true;
  }
  return false;
}

double power_term(double multiplier, double base, Alpha alpha) {
  if (multiplier == 0.0 || base == 0.0) return 0.0;
  return multiplier * std::pow(base, alpha.value());
}

double thm31_bound(int r, int s, Alpha alpha) {
  check_positive(r, "r");
  check_positive(s, "s");
  return power_term(1, r + s, alpha) + power_term(r - 1, s, alpha) +
         power_term(s - 1, r, alpha);
}

double thm32_bound(int n, Alpha alpha) {
  if (n < 2) throw GraphError("thm32 bound needs n >= 2");
  return thm31_bound(n / 2, n - n / 2, alpha);
}

double thm41_bound(int n, Alpha alpha) {
  if (n < 2) throw GraphError("thm41 bound needs n >= 2");
  return power_term(1, 2.0 * (n - 1), alpha) + power_term(n - 1, n - 2, alpha);
}

double b_alpha(int n, int k, Alpha alpha) {
  check_nk(n, k);
  const auto [q1, q3] = gi_simple_pair(n, k, 1);
  double sum = power_term(k, n - 2, alpha) + power_term(1, q1, alpha);
  // For k = n-1 the multiplier n-k-2 is -1 and q3 = n-3: the two terms cancel.
  if (k < n - 1) sum += power_term(n - k - 2, n - 3, alpha) + power_term(1, q3, alpha);
  return sum;
}

Spectrum complete_spectrum_closed_form(int n) {
  check_positive(n, "n");
  std::vector<double> values(static_cast<std::size_t>(n), n - 2.0);
  values[0] = 2.0 * n - 2.0;
  if (n == 1) values[0] = 0.0;
  return Spectrum(std::move(values));
}

Spectrum complete_bipartite_spectrum_closed_form(int r, int s) {
  check_positive(r, "r");
  check_positive(s, "s");
  std::vector<double> values{static_cast<double>(r + s), 0.0};
  values.insert(values.end(), static_cast<std::size_t>(s - 1), static_cast<double>(r));
  values.insert(values.end(), static_cast<std::size_t>(r - 1), static_cast<double>(s));
  return Spectrum(std::move(values));
}

Spectrum gi_spectrum_closed_form(int n, int k, int i) {
  const int max_i = gi_max_index(n, k);
  if (i < 1 || i > max_i) {
    throw GraphError("G(i) index " + std::to_string(i) + " outside [1, " +
                     std::to_string(max_i) + "]");
  }
  const auto [q1, q3] = gi_simple_pair(n, k, i);
  std::vector<double> values{q1, static_cast<double>(n - 2)};
  values.insert(values.end(), static_cast<std::size_t>(k - 1), static_cast<double>(n - 2));
  values.insert(values.end(), static_cast<std::size_t>(i - 1), static_cast<double>(k + i - 2));
  const int tail = n - k - i - 1;
  if (tail >= 0) {
    values.push_back(q3);
    values.insert(values.end(), static_cast<std::size_t>(tail), static_cast<double>(n - i - 2));
  }
  // tail == -1 only for k = n-1: the -1 multiplicity of n-3 cancels q3 = n-3.
  return Spectrum(std::move(values));
}

long long twice_edge_bound(int n, int k) {
  check_nk(n, k);
  const long long nn = n;
  return nn * nn - 3 * nn + 2LL * k + 2;
}

long long laplacian_energy_bound(int n, int k) {
  check_nk(n, k);
  const long long nn = n;
  const long long kk = k;
  return nn * nn * nn - 4 * nn * nn + (2 * kk + 5) * nn + kk * kk - kk - 2;
}

long long laplacian_energy_bound_as_printed(int n, int k) {
  check_nk(n, k);
  const long long nn = n;
  const long long kk = k;
  return nn * nn * nn + 2 * nn * nn + (2 * kk + 5) * nn + kk * kk - kk - 2;
}

double bound_value(BoundId id, const BoundParameters& p, Alpha alpha) {
  switch (id) {
    case BoundId::thm31_upper:
    case BoundId::thm31_lower:
      return thm31_bound(p.r, p.s, alpha);
    case BoundId::thm32_upper:
    case BoundId::thm32_lower:
    case BoundId::conj31_upper:
      return thm32_bound(p.n, alpha);
    case BoundId::thm41_upper:
    case BoundId::thm41_lower:
      return thm41_bound(p.n, alpha);
    case BoundId::thm43_upper:
    case BoundId::conj44_lower:
      return b_alpha(p.n, p.k, alpha);
  }
  throw GraphError("unknown bound id");
}

Graph extremal_graph(BoundId id, const BoundParameters& p) {
  switch (id) {
    case BoundId::thm31_upper:
    case BoundId::thm31_lower:
      return complete_bipartite(p.r, p.s);
    case BoundId::thm32_upper:
    case BoundId::thm32_lower:
    case BoundId::conj31_upper:
      if (p.n < 2) throw GraphError("extremal bipartite graph needs n >= 2");
      return complete_bipartite(p.n / 2, p.n - p.n / 2);
    case BoundId::thm41_upper:
    case BoundId::thm41_lower:
      return complete(p.n);
    case BoundId::thm43_upper:
    case BoundId::conj44_lower:
      return construct_gi(p.n, p.k, 1);
  }
  throw GraphError("unknown bound id");
}

}  // namespace qpow
