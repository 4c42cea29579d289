#include "qpow/invariants.hpp"

#include <cmath>
#include <string>

#include "qpow/error.hpp"

namespace qpow {

Alpha::Alpha(double value) : value_(value) {
  if (value == 0.0 || !std::isfinite(value)) {
    throw GraphError("alpha must be a finite non-zero real, got " + std::to_string(value));
  }
}

double nonzero_power_sum(const Spectrum& spec, Alpha alpha) {
  double sum = 0.0;
  std::size_t used = 0;
  for (double v : spec.values()) {
    if (v <= spec.zero_threshold()) continue;
    sum += std::pow(v, alpha.value());
    ++used;
  }
  if (alpha.negative() && used == 0) {
    throw NumericalError("power sum with negative alpha over an all-zero spectrum");
  }
  return sum;
}

double signless_power_sum(const Graph& g, Alpha alpha, EigenOptions options) {
  return nonzero_power_sum(q_spectrum(g, options), alpha);
}

double laplacian_power_sum(const Graph& g, Alpha alpha, EigenOptions options) {
  return nonzero_power_sum(l_spectrum(g, options), alpha);
}

double zagreb(const Graph& g, Alpha alpha) {
  double sum = 0.0;
  for (int v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d == 0) {
      if (alpha.negative()) {
        throw GraphError("Z_alpha with alpha < 0 is undefined: vertex " + std::to_string(v) +
                         " is isolated");
      }
      continue;
    }
    sum += std::pow(static_cast<double>(d), alpha.value());
  }
  return sum;
}

double incidence_energy(const Graph& g) { return signless_power_sum(g, Alpha(0.5)); }

double laplacian_energy_like(const Graph& g) { return laplacian_power_sum(g, Alpha(0.5)); }

double kirchhoff_index(const Graph& g) {
  if (!is_connected(g)) throw GraphError("Kirchhoff index needs a connected graph");
  if (g.order() == 1) return 0.0;
  return g.order() * laplacian_power_sum(g, Alpha(-1.0));
}

double laplacian_energy(const Graph& g) { return laplacian_power_sum(g, Alpha(2.0)); }

double graph_energy(const Graph& g) {
  double sum = 0.0;
  const Spectrum spec = a_spectrum(g);
  for (double v : spec.values()) sum += std::abs(v);
  return sum;
}

int first_zagreb(const Graph& g) {
  int sum = 0;
  for (int v = 0; v < g.order(); ++v) sum += g.degree(v) * g.degree(v);
  return sum;
}

InvariantBundle named_invariants(const Graph& g) {
  const Spectrum q = q_spectrum(g);
  const Spectrum l = l_spectrum(g);
  InvariantBundle out;
  out.m = g.size();
  out.IE = nonzero_power_sum(q, Alpha(0.5));
  out.LEL = nonzero_power_sum(l, Alpha(0.5));
  if (is_connected(g)) {
    out.Kf = g.order() == 1 ? 0.0 : g.order() * nonzero_power_sum(l, Alpha(-1.0));
  }
  out.E_L = nonzero_power_sum(l, Alpha(2.0));
  out.E = graph_energy(g);
  out.M1 = first_zagreb(g);
  return out;
}

}  // namespace qpow
