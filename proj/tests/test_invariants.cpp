#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qpow/error.hpp"
#include "qpow/invariants.hpp"
#include "qpow/search.hpp"

using namespace qpow;

TEST_SUITE("invariants") {
  TEST_CASE("alpha rejects zero") {
    CHECK_THROWS_AS(Alpha(0.0), GraphError);
    CHECK_THROWS_AS(Alpha(NAN), GraphError);
    CHECK_THROWS_AS(Alpha{INFINITY}, GraphError);
    CHECK(Alpha(-0.5).negative());
  }

  TEST_CASE("power sums of explicit spectra") {
    const Spectrum k23({5, 3, 2, 2, 0});
    CHECK(nonzero_power_sum(k23, Alpha(1)) == doctest::Approx(12));
    CHECK(nonzero_power_sum(k23, Alpha(-1)) == doctest::Approx(23.0 / 15.0).epsilon(1e-12));
    CHECK(nonzero_power_sum(Spectrum({2, 0}), Alpha(0.5)) == doctest::Approx(std::sqrt(2.0)));
    CHECK_THROWS_AS(nonzero_power_sum(Spectrum({0, 0}), Alpha(-1)), NumericalError);
    CHECK(nonzero_power_sum(Spectrum({0, 0}), Alpha(2)) == 0.0);
  }

  TEST_CASE("graph power sums") {
    CHECK(signless_power_sum(complete(4), Alpha(1)) == doctest::Approx(12));
    CHECK(signless_power_sum(complete_bipartite(2, 2), Alpha(0.5)) ==
          doctest::Approx(2 + 2 * std::sqrt(2.0)));
    CHECK(laplacian_power_sum(complete(3), Alpha(2)) == doctest::Approx(18));
    CHECK(signless_power_sum(complete(3), Alpha(2)) == doctest::Approx(18));
  }

  TEST_CASE("named invariants") {
    CHECK(kirchhoff_index(complete(2)) == doctest::Approx(1));
    CHECK(kirchhoff_index(path(3)) == doctest::Approx(4));
    CHECK(kirchhoff_index(Graph(1, {})) == 0.0);
    CHECK_THROWS_AS(kirchhoff_index(Graph::empty(2)), GraphError);
    CHECK(graph_energy(complete(2)) == doctest::Approx(2));
    CHECK(graph_energy(complete(3)) == doctest::Approx(4));
    CHECK(incidence_energy(complete_bipartite(2, 2)) == doctest::Approx(2 + 2 * std::sqrt(2.0)));
    CHECK(laplacian_energy_like(complete(3)) == doctest::Approx(2 * std::sqrt(3.0)));
    CHECK(laplacian_energy(complete(4)) == doctest::Approx(48));

    const InvariantBundle b = named_invariants(cycle(4));
    CHECK(b.m == 4);
    CHECK(b.M1 == 16);
    CHECK(b.E_L == doctest::Approx(24));
    REQUIRE(b.Kf);
    CHECK(*b.Kf == doctest::Approx(5));  // resistances 3/4 * 4 + 1 * 2
    CHECK_FALSE(named_invariants(Graph::empty(3)).Kf);
  }

  TEST_CASE("Zagreb indices") {
    CHECK(zagreb(complete_bipartite(2, 3), Alpha(2)) == doctest::Approx(30));
    CHECK(zagreb(complete(4), Alpha(2)) == doctest::Approx(36));
    CHECK(first_zagreb(complete(4)) == 36);
    for (const Graph& g : {path(5), cycle(6), construct_gi(6, 2, 1)}) {
      CHECK(zagreb(g, Alpha(1)) == doctest::Approx(2 * g.size()));
    }
    CHECK(zagreb(Graph(3, {{0, 1}}), Alpha(1)) == doctest::Approx(2));
    CHECK_THROWS_AS(zagreb(Graph(3, {{0, 1}}), Alpha(-1)), GraphError);
  }

  TEST_CASE("S_2 = s_2 = M1 + 2m for every graph, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
      oracle::for_each_graph(n, [](const Graph& g) {
        const double target = first_zagreb(g) + 2.0 * g.size();
        REQUIRE(std::abs(signless_power_sum(g, Alpha(2)) - target) <= 1e-8);
        REQUIRE(std::abs(laplacian_power_sum(g, Alpha(2)) - target) <= 1e-8);
      });
    }
  }

  TEST_CASE("S_alpha = s_alpha on connected bipartite graphs, n <= 7") {
    const double grid[] = {-2, -1, -0.5, 0.5, 1, 2, 3};
    for (int n = 2; n <= 7; ++n) {
      GraphEnumerator e(n, {Population::connected_bipartite, 0});
      while (auto g = e.next()) {
        const Spectrum q = q_spectrum(*g);
        const Spectrum l = l_spectrum(*g);
        for (double a : grid) {
          const double big = nonzero_power_sum(q, Alpha(a));
          REQUIRE(std::abs(big - nonzero_power_sum(l, Alpha(a))) <= 1e-8 * std::max(1.0, big));
        }
      }
    }
  }
}
