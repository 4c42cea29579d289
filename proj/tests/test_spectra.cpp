#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numeric>

#include "oracles.hpp"
#include "qpow/bounds.hpp"
#include "qpow/error.hpp"
#include "qpow/invariants.hpp"
#include "qpow/spectra.hpp"

using namespace qpow;

namespace {

bool same_spectrum(const Spectrum& a, std::vector<double> expected, double tol = 1e-8) {
  return a.max_deviation(Spectrum(std::move(expected))) <= tol;
}

}  // namespace

TEST_SUITE("spectra") {
  TEST_CASE("matrices of K2") {
    const Graph k2 = complete(2);
    const auto q = signless_laplacian(k2);
    const auto l = laplacian(k2);
    CHECK(q(0, 0) == 1);
    CHECK(q(0, 1) == 1);
    CHECK(q(1, 1) == 1);
    CHECK(l(0, 1) == -1);
    CHECK(l(1, 0) == -1);
    CHECK(l(0, 0) == 1);
    CHECK(signless_laplacian(complete_bipartite(2, 3)).trace() == 12);
  }

  TEST_CASE("small spectra") {
    CHECK(same_spectrum(q_spectrum(complete(3)), {4, 1, 1}));
    CHECK(same_spectrum(q_spectrum(complete_bipartite(2, 3)), {5, 3, 2, 2, 0}));
    CHECK(same_spectrum(q_spectrum(Graph(1, {})), {0}));
    CHECK(same_spectrum(l_spectrum(complete(3)), {3, 3, 0}));
    CHECK(same_spectrum(q_spectrum(cycle(4)), {4, 2, 2, 0}));
    CHECK(same_spectrum(a_spectrum(complete(2)), {1, -1}));
  }

  TEST_CASE("spectra reproduce exact matrix power traces") {
    const Graph graphs[] = {complete(5), cycle(6), path(5), construct_gi(7, 2, 2),
                            complete_bipartite(3, 4), disjoint_union(complete(3), path(3))};
    for (const Graph& g : graphs) {
      const int n = g.order();
      CHECK(oracle::power_sums_match(q_spectrum(g).values(),
                                     oracle::trace_powers(oracle::signless_laplacian(g), n)));
      CHECK(oracle::power_sums_match(l_spectrum(g).values(),
                                     oracle::trace_powers(oracle::laplacian(g), n)));
      CHECK(oracle::power_sums_match(a_spectrum(g).values(),
                                     oracle::trace_powers(oracle::adjacency(g), n)));
    }
  }

  TEST_CASE("spectrum ordering and zero threshold") {
    const Spectrum s({1.0, 3.0, 0.0, 2.0});
    CHECK(std::vector<double>(s.values().begin(), s.values().end()) == std::vector<double>{3.0, 2.0, 1.0, 0.0});
    CHECK(s.zero_threshold() == doctest::Approx(3e-8));
    CHECK(s.nonzero_count() == 3);
    CHECK(Spectrum({0.5, 1e-12}).nonzero_count() == 1);
    CHECK(std::isinf(s.max_deviation(Spectrum({1.0}))));
  }

  TEST_CASE("non-convergence is reported") {
    SymmetricMatrix m(4);
    m.set(0, 1, 1.0);
    m.set(1, 2, 2.0);
    m.set(2, 3, 3.0);
    m.set(0, 3, 1.5);
    CHECK_THROWS_AS(eigenvalues(m, {1e-300, 1}), NumericalError);
    CHECK_NOTHROW(eigenvalues(m));
  }

  TEST_CASE("trace identities and positive semidefiniteness, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      oracle::for_each_graph(n, [](const Graph& g) {
        const Spectrum q = q_spectrum(g);
        const double sum = std::accumulate(q.values().begin(), q.values().end(), 0.0);
        double squares = 0.0;
        for (double v : q.values()) squares += v * v;
        REQUIRE(std::abs(sum - 2.0 * g.size()) <= 1e-8);
        REQUIRE(std::abs(squares - (first_zagreb(g) + 2.0 * g.size())) <= 1e-8);
        REQUIRE(q.values().back() >= -1e-8);
      });
    }
  }

  TEST_CASE("smallest Q-eigenvalue is zero iff bipartite, connected n <= 7") {
    for (int n = 1; n <= 7; ++n) {
      const std::uint64_t stride = n == 7 ? 7 : 1;
      std::vector<Edge> pairs;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); mask += stride) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
          if (mask >> b & 1U) edges.push_back(pairs[b]);
        const Graph g(n, edges);
        if (!is_connected(g)) continue;
        const Spectrum q = q_spectrum(g);
        REQUIRE(q.is_zero(q.values().back()) == oracle::bipartite(g));
      }
    }
  }

  TEST_CASE("closed forms against the eigensolver") {
    for (int n = 1; n <= 12; ++n) {
      CHECK(complete_spectrum_closed_form(n).max_deviation(q_spectrum(complete(n))) <= 1e-8);
    }
    for (int r = 1; r <= 8; ++r) {
      for (int s = r; s <= 8; ++s) {
        CHECK(complete_bipartite_spectrum_closed_form(r, s).max_deviation(
                  q_spectrum(complete_bipartite(r, s))) <= 1e-8);
      }
    }
    for (int n = 2; n <= 12; ++n) {
      for (int k = 1; k <= n - 1; ++k) {
        for (int i = 1; i <= gi_max_index(n, k); ++i) {
          CHECK(gi_spectrum_closed_form(n, k, i).max_deviation(q_spectrum(construct_gi(n, k, i))) <=
                1e-8);
        }
      }
    }
  }

  TEST_CASE("Jacobi agrees with a LAPACK-style solver, every graph n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      oracle::for_each_graph(n, [n](const Graph& g) {
        for (MatrixKind kind : {MatrixKind::signless_laplacian, MatrixKind::laplacian, MatrixKind::adjacency}) {
          const SymmetricMatrix m = graph_matrix(g, kind);
          Eigen::MatrixXd dense(n, n);
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) dense(i, j) = m(i, j);
          Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
          const Eigen::VectorXd ev = solver.eigenvalues();
          const Spectrum reference(std::vector<double>(ev.data(), ev.data() + n));
          REQUIRE(eigenvalues(m).max_deviation(reference) <= 1e-10);
        }
      });
    }
  }
}
