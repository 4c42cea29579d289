#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qpow/graph.hpp"

namespace qpow {

/// Dense symmetric matrix. Entries are written in mirrored pairs so symmetry is exact.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int order);

  int order() const noexcept { return n_; }
  double operator()(int i, int j) const noexcept { return data_[index(i, j)]; }
  void set(int i, int j, double value) noexcept;

  double trace() const noexcept;
  double frobenius_norm() const noexcept;
  std::span<const double> data() const noexcept { return data_; }

 private:
  std::size_t index(int i, int j) const noexcept {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) +
           static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> data_;
};

enum class MatrixKind { signless_laplacian, laplacian, adjacency };

SymmetricMatrix adjacency(const Graph& g);
/// L = D - A.
SymmetricMatrix laplacian(const Graph& g);
/// Q = D + A.
SymmetricMatrix signless_laplacian(const Graph& g);
SymmetricMatrix graph_matrix(const Graph& g, MatrixKind kind);

/// Relative zero-classification threshold: values <= this are treated as zero.
inline constexpr double kZeroThresholdScale = 1e-8;

/// Real eigenvalues sorted descending, with the threshold that decides which count as
/// non-zero.
class Spectrum {
 public:
  Spectrum() = default;
  /// Sorts `values` descending and sets zero_threshold = 1e-8 * max(1, largest).
  explicit Spectrum(std::vector<double> values);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double zero_threshold() const noexcept { return zero_threshold_; }

  /// Count h of values strictly above zero_threshold.
  std::size_t nonzero_count() const noexcept;
  bool is_zero(double value) const noexcept { return value <= zero_threshold_ && value >= -zero_threshold_; }

  /// Largest |entrywise difference|; +inf on a length mismatch.
  double max_deviation(const Spectrum& other) const noexcept;

 private:
  std::vector<double> values_;
  double zero_threshold_ = kZeroThresholdScale;
};

struct EigenOptions {
  /// Converged once the off-diagonal Frobenius norm is below tolerance * ||M||_F.
  double relative_tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Tightened options used when re-verifying a reported bound violation.
inline constexpr EigenOptions kTightEigenOptions{1e-14, 100};

/// All eigenvalues of a symmetric matrix by cyclic Jacobi rotations.
/// Throws NumericalError if the sweep budget runs out.
Spectrum eigenvalues(const SymmetricMatrix& m, EigenOptions options = {});

Spectrum q_spectrum(const Graph& g, EigenOptions options = {});
Spectrum l_spectrum(const Graph& g, EigenOptions options = {});
Spectrum a_spectrum(const Graph& g, EigenOptions options = {});
Spectrum spectrum(const Graph& g, MatrixKind kind, EigenOptions options = {});

}  // namespace qpow
