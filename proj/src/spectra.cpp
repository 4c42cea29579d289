#include "qpow/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "qpow/error.hpp"

namespace qpow {

SymmetricMatrix::SymmetricMatrix(int order)
    : n_(order), data_(static_cast<std::size_t>(order) * static_cast<std::size_t>(order), 0.0) {}

void SymmetricMatrix::set(int i, int j, double value) noexcept {
  data_[index(i, j)] = value;
  data_[index(j, i)] = value;
}

double SymmetricMatrix::trace() const noexcept {
  double sum = 0.0;
  for (int i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

double SymmetricMatrix::frobenius_norm() const noexcept {
  double sum = 0.0;
  for (double x : data_) sum += x * x;
  return std::sqrt(sum);
}

namespace {

SymmetricMatrix degree_adjacency(const Graph& g, double diagonal_sign, double off_sign) {
  SymmetricMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, diagonal_sign * g.degree(v));
  for (const auto& [u, v] : g.edges()) m.set(u, v, off_sign);
  return m;
}

}  // namespace

SymmetricMatrix adjacency(const Graph& g) { return degree_adjacency(g, 0.0, 1.0); }
SymmetricMatrix laplacian(const Graph& g) { return degree_adjacency(g, 1.0, -1.0); }
SymmetricMatrix signless_laplacian(const Graph& g) { return degree_adjacency(g, 1.0, 1.0); }

SymmetricMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::signless_laplacian:
      return signless_laplacian(g);
    case MatrixKind::laplacian:
      return laplacian(g);
    case MatrixKind::adjacency:
      return adjacency(g);
  }
  return signless_laplacian(g);
}

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end(), std::greater<>());
  const double largest = values_.empty() ? 0.0 : values_.front();
  zero_threshold_ = kZeroThresholdScale * std::max(1.0, largest);
}

std::size_t Spectrum::nonzero_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(values_.begin(), values_.end(), [t = zero_threshold_](double v) { return v > t; }));
}

double Spectrum::max_deviation(const Spectrum& other) const noexcept {
  if (size() != other.size()) return std::numeric_limits<double>::infinity();
  double worst = 0.0;
  for (std::size_t i = 0; i < size(); ++i) {
    worst = std::max(worst, std::abs(values_[i] - other.values_[i]));
  }
  return worst;
}

Spectrum eigenvalues(const SymmetricMatrix& m, EigenOptions options) {
  const int n = m.order();
  const auto nn = static_cast<std::size_t>(n);
  std::vector<double> a(m.data().begin(), m.data().end());
  auto at = [&a, nn](int i, int j) -> double& {
    return a[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)];
  };

  const double target = options.relative_tolerance * m.frobenius_norm();
  auto off_norm = [&] {
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) sum += 2.0 * at(i, j) * at(i, j);
    }
    return std::sqrt(sum);
  };

  bool converged = false;
  for (int sweep = 0; sweep <= options.max_sweeps; ++sweep) {
    if (off_norm() <= target) {
      converged = true;
      break;
    }
    if (sweep == options.max_sweeps) break;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        at(p, p) -= t * apq;
        at(q, q) += t * apq;
        at(p, q) = 0.0;
        at(q, p) = 0.0;
        for (int r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = at(r, p);
          const double arq = at(r, q);
          const double new_rp = c * arp - s * arq;
          const double new_rq = s * arp + c * arq;
          at(r, p) = new_rp;
          at(p, r) = new_rp;
          at(r, q) = new_rq;
          at(q, r) = new_rq;
        }
      }
    }
  }
  if (!converged) {
    throw NumericalError("Jacobi eigensolver did not converge within " +
                         std::to_string(options.max_sweeps) + " sweeps (order " +
                         std::to_string(n) + ")");
  }

  std::vector<double> values(nn);
  for (int i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = at(i, i);
  return Spectrum(std::move(values));
}

Spectrum q_spectrum(const Graph& g, EigenOptions options) {
  return eigenvalues(signless_laplacian(g), options);
}

Spectrum l_spectrum(const Graph& g, EigenOptions options) {
  return eigenvalues(laplacian(g), options);
}

Spectrum a_spectrum(const Graph& g, EigenOptions options) {
  return eigenvalues(adjacency(g), options);
}

Spectrum spectrum(const Graph& g, MatrixKind kind, EigenOptions options) {
  return eigenvalues(graph_matrix(g, kind), options);
}

}  // namespace qpow
