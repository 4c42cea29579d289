#pragma once

#include <optional>

#include "qpow/graph.hpp"
#include "qpow/spectra.hpp"

namespace qpow {

/// Non-zero real exponent for power sums. Throws GraphError on 0 or non-finite values.
class Alpha {
 public:
  explicit Alpha(double value);
  double value() const noexcept { return value_; }
  bool negative() const noexcept { return value_ < 0.0; }

 private:
  double value_;
};

/// Sum of v^alpha over the values of `spec` classified as non-zero. Values at or below
/// the spectrum's zero threshold contribute nothing for any alpha.
/// Throws NumericalError when alpha < 0 and nothing is non-zero.
double nonzero_power_sum(const Spectrum& spec, Alpha alpha);

/// S_alpha: power sum over the non-zero signless Laplacian eigenvalues.
double signless_power_sum(const Graph& g, Alpha alpha, EigenOptions options = {});
/// s_alpha: power sum over the non-zero Laplacian eigenvalues.
double laplacian_power_sum(const Graph& g, Alpha alpha, EigenOptions options = {});

/// Z_alpha = sum of d_i^alpha. Zero degrees contribute 0 for alpha > 0.
/// Throws GraphError for alpha < 0 with an isolated vertex.
double zagreb(const Graph& g, Alpha alpha);

double incidence_energy(const Graph& g);         // S_{1/2}
double laplacian_energy_like(const Graph& g);    // s_{1/2}
/// n * s_{-1}. Throws GraphError on a disconnected graph.
double kirchhoff_index(const Graph& g);
/// Sum of squared Laplacian eigenvalues (not the |mu - 2m/n| variant).
double laplacian_energy(const Graph& g);
double graph_energy(const Graph& g);             // sum |lambda_i|
int first_zagreb(const Graph& g);                // M1

/// Named invariants, field names following the usual symbols.
struct InvariantBundle {
  int m = 0;
  double IE = 0.0;
  double LEL = 0.0;
  /// Absent for disconnected graphs.
  std::optional<double> Kf;
  double E_L = 0.0;
  double E = 0.0;
  double M1 = 0.0;
};

InvariantBundle named_invariants(const Graph& g);

}  // namespace qpow
