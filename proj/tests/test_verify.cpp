#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "qpow/connectivity.hpp"
#include "qpow/error.hpp"
#include "qpow/search.hpp"
#include "qpow/verify.hpp"

using namespace qpow;

TEST_SUITE("verify") {
  TEST_CASE("interlacing on small graphs") {
    const InterlacingCheck k3 = check_interlacing(complete(3), {0, 1});
    CHECK(k3.passed);
    CHECK(k3.with_edge.max_deviation(Spectrum({4, 1, 1})) <= 1e-10);
    CHECK(k3.without_edge.max_deviation(Spectrum({3, 1, 0})) <= 1e-10);
    CHECK(k3.trace_gap == doctest::Approx(2));

    const InterlacingCheck k2 = check_interlacing(complete(2), {0, 1});
    CHECK(k2.passed);
    CHECK(k2.without_edge.max_deviation(Spectrum({0, 0})) <= 1e-12);

    for (const Edge& e : cycle(4).edges()) {
      const InterlacingCheck c = check_interlacing(cycle(4), e);
      CHECK(c.passed);
      CHECK(c.without_edge.max_deviation(q_spectrum(path(4))) <= 1e-8);
    }
    CHECK_THROWS_AS(check_interlacing(path(3), {0, 2}), GraphError);
  }

  TEST_CASE("edge monotonicity examples") {
    const MonotonicityCheck k4 = check_edge_monotonicity(complete(4), Alpha(1));
    CHECK(k4.passed);
    CHECK(k4.asserted == 6);
    for (const auto& e : k4.edges) CHECK(e.margin == doctest::Approx(2));

    // K3 -> P3 at alpha = -1: the zero eigenvalue of P3 drops out and the sum shrinks.
    const MonotonicityCheck k3 = check_edge_monotonicity(complete(3), Alpha(-1));
    CHECK(k3.passed);
    CHECK(k3.asserted == 0);
    CHECK(k3.recorded == 3);
    CHECK(k3.edges[0].with_edge == doctest::Approx(2.25));
    CHECK(k3.edges[0].without_edge == doctest::Approx(4.0 / 3.0));
    CHECK_FALSE(k3.edges[0].holds);

    const MonotonicityCheck c4 = check_edge_monotonicity(cycle(4), Alpha(0.5));
    CHECK(c4.passed);
    CHECK(c4.edges[0].with_edge == doctest::Approx(2 + 2 * std::sqrt(2.0)));
  }

  TEST_CASE("alpha < 0 monotonicity where the nonzero count is unchanged, n <= 6") {
    // The restriction is tight: every asserted case holds, and some connected-to-connected
    // deletions that change the count fail.
    int asserted = 0;
    int failing_recorded = 0;
    for (int n = 2; n <= 6; ++n) {
      oracle::for_each_graph(n, [&](const Graph& g) {
        if (!is_connected(g)) return;
        for (double a : {-1.0, -0.5}) {
          const MonotonicityCheck m = check_edge_monotonicity(g, Alpha(a));
          REQUIRE(m.passed);
          asserted += m.asserted;
          for (const auto& e : m.edges) {
            if (!e.asserted && is_connected(g.without_edge(e.edge)) && !e.holds) ++failing_recorded;
          }
        }
      });
    }
    CHECK(asserted > 0);
    CHECK(failing_recorded > 0);
  }

  TEST_CASE("bipartite cospectrality") {
    CHECK(check_bipartite_cospectral(cycle(4)).passed);
    const CospectralCheck star = check_bipartite_cospectral(complete_bipartite(1, 3));
    CHECK(star.passed);
    CHECK(star.q.max_deviation(Spectrum({4, 1, 1, 0})) <= 1e-10);
    CHECK_FALSE(check_bipartite_cospectral(complete(3)).applicable);
  }

  TEST_CASE("check_bound examples") {
    const BoundResult k23 = check_bound(complete_bipartite(2, 3), {BoundId::thm31_lower}, Alpha(-1));
    CHECK(k23.applicable);
    CHECK(k23.equality);
    CHECK(k23.extremal_match);
    CHECK(k23.invariant_value == doctest::Approx(23.0 / 15));

    const BoundResult p4 = check_bound(path(4), {BoundId::thm32_upper}, Alpha(0.5));
    CHECK(p4.passed());
    CHECK_FALSE(p4.equality);
    CHECK(p4.slack > 1e-3);

    const BoundResult gi = check_bound(construct_gi(5, 2, 1), {BoundId::thm43_upper, 2}, Alpha(2));
    CHECK(gi.equality);
    CHECK(gi.extremal_match);
    CHECK(gi.bound_value == doctest::Approx(70));
  }

  TEST_CASE("inapplicable combinations are explicit") {
    CHECK_FALSE(check_bound(complete(4), {BoundId::thm32_upper}, Alpha(0.5)).applicable);
    CHECK_FALSE(check_bound(Graph::empty(3), {BoundId::thm41_upper}, Alpha(1)).applicable);
    CHECK_FALSE(check_bound(complete(4), {BoundId::thm43_upper, 2}, Alpha(1)).applicable);
    CHECK_FALSE(check_bound(path(4), {BoundId::thm43_upper, 1}, Alpha(0.5)).applicable);
    CHECK_FALSE(check_bound(path(4), {BoundId::thm41_lower}, Alpha(-1)).applicable);
    CHECK(check_bound(complete(2), {BoundId::thm41_lower}, Alpha(-1)).applicable);
    const BoundResult r = check_bound(complete(4), {BoundId::thm32_upper}, Alpha(0.5));
    CHECK_FALSE(r.reason.empty());
    CHECK_FALSE(r.passed());
    CHECK_THROWS_AS(check_bound(path(4), {BoundId::thm43_upper}, Alpha(1)), GraphError);
    CHECK_THROWS_AS(check_bound(path(4), {BoundId::thm43_upper, 4}, Alpha(1)), GraphError);
  }

  TEST_CASE("equality tolerance") {
    CHECK(equality_tolerance(0.5) == doctest::Approx(1e-7));
    CHECK(equality_tolerance(-300) == doctest::Approx(3e-5));
  }

  TEST_CASE("identities") {
    const IdentityReport k4 = check_identities(complete(4));
    CHECK(k4.passed);
    CHECK(k4.checks[1].lhs == doctest::Approx(48));
    CHECK(k4.checks[1].rhs == doctest::Approx(48));
    const IdentityReport k3 = check_identities(complete(3));
    CHECK(k3.passed);
    for (const auto& c : k3.checks) {
      if (c.name == "S_a vs s_a at a=1.5") CHECK(c.lhs <= c.rhs);
    }
    const IdentityReport c6 = check_identities(cycle(6));
    CHECK(c6.passed);
    for (const auto& c : c6.checks) {
      if (c.name.rfind("S_a vs", 0) == 0) CHECK(c.lhs == doctest::Approx(c.rhs));
    }
  }

  TEST_CASE("results are deterministic") {
    const Graph g = construct_gi(7, 2, 2);
    const BoundResult a = check_bound(g, {BoundId::thm43_upper, 3}, Alpha(1.5));
    const BoundResult b = check_bound(g, {BoundId::thm43_upper, 3}, Alpha(1.5));
    CHECK(a.invariant_value == b.invariant_value);
    CHECK(a.bound_value == b.bound_value);
    CHECK(a.slack == b.slack);
  }

  TEST_CASE("spectral signature agrees with isomorphism on bound extremal checks, n <= 6") {
    // thm41, thm43 and thm32 extremal decisions validated against a permutation oracle.
    for (int n = 2; n <= 6; ++n) {
      const Graph kn = complete(n);
      const Graph bal = complete_bipartite(n / 2, n - n / 2);
      std::vector<Graph> gis;
      for (int k = 1; k <= n - 1; ++k) gis.push_back(construct_gi(n, k, 1));
      const SpectralSignature sig_kn = SpectralSignature::of(kn);
      const SpectralSignature sig_bal = SpectralSignature::of(bal);
      std::vector<SpectralSignature> sig_gi;
      for (const Graph& g : gis) sig_gi.push_back(SpectralSignature::of(g));
      oracle::for_each_graph(n, [&](const Graph& g) {
        const SpectralSignature s = SpectralSignature::of(g);
        REQUIRE(s.matches(sig_kn) == oracle::isomorphic(g, kn));
        REQUIRE(s.matches(sig_bal) == oracle::isomorphic(g, bal));
        for (std::size_t k = 0; k < gis.size(); ++k) {
          REQUIRE(s.matches(sig_gi[k]) == oracle::isomorphic(g, gis[k]));
        }
      });
    }
  }

  TEST_CASE("thm43 and the edge-count corollary restricted to edge connectivity <= k, n <= 6") {
    for (int n = 3; n <= 6; ++n) {
      oracle::for_each_graph(n, [n](const Graph& g) {
        if (!is_connected(g)) return;
        const ConnectivityProfile p = connectivity_profile(g);
        for (int k = std::max(1, p.epsilon); k <= n - 1; ++k) {
          REQUIRE(2LL * g.size() <= twice_edge_bound(n, k));
          for (double a : {1.0, 2.0}) {
            REQUIRE(check_bound(g, {BoundId::thm43_upper, k}, Alpha(a)).passed());
          }
        }
      });
    }
  }
}
