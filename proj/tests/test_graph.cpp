#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "qpow/error.hpp"
#include "qpow/graph.hpp"
#include "qpow/spectra.hpp"

using namespace qpow;

TEST_SUITE("graph") {
  TEST_CASE("construction from edge lists") {
    const Graph p3(3, {{0, 1}, {1, 2}});
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.has_edge(1, 0));
    CHECK_FALSE(p3.has_edge(0, 2));

    CHECK(Graph(1, {}).size() == 0);
    CHECK(Graph(4, {{0, 1}, {1, 0}, {2, 3}}).size() == 2);
  }

  TEST_CASE("invalid edges are rejected") {
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{-1, 0}}), GraphError);
    CHECK_THROWS_AS(Graph(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph(0, {}), GraphError);
    CHECK_THROWS_AS(Graph(kMaxVertices + 1, {}), GraphError);
  }

  TEST_CASE("edge deletion has value semantics") {
    const Graph k3 = complete(3);
    const Graph p3 = k3.without_edge({0, 1});
    CHECK(p3.size() == 2);
    CHECK(k3.size() == 3);
    CHECK(is_connected(p3));

    const Graph split = Graph(3, {{0, 1}, {1, 2}}).without_edge({0, 1});
    CHECK(split.size() == 1);
    CHECK_FALSE(is_connected(split));

    for (const Edge& e : complete(4).edges()) CHECK(complete(4).without_edge(e).size() == 5);
    CHECK_THROWS_AS(p3.without_edge({0, 1}), GraphError);
  }

  TEST_CASE("complete and complete bipartite") {
    CHECK(complete(4).size() == 6);
    const Graph k23 = complete_bipartite(2, 3);
    CHECK(k23.size() == 6);
    CHECK(bipartition(k23) == std::pair{2, 3});
    CHECK(complete_bipartite(1, 1) == complete(2));
    CHECK_THROWS_AS(complete(0), GraphError);
    CHECK_THROWS_AS(complete_bipartite(0, 2), GraphError);
  }

  TEST_CASE("join and disjoint union") {
    CHECK(join(complete(1), complete(1)) == complete(2));
    CHECK(join(Graph::empty(2), Graph::empty(3)) == complete_bipartite(2, 3));
    const Graph u = disjoint_union(complete(3), complete(2));
    CHECK(u.size() == 4);
    CHECK_FALSE(is_connected(u));
    CHECK(u.has_edge(3, 4));

    const Graph graphs[] = {complete(3), path(4), cycle(5), Graph::empty(2), complete_bipartite(2, 2)};
    for (const Graph& g : graphs) {
      for (const Graph& h : graphs) {
        CHECK(join(g, h).size() == g.size() + h.size() + g.order() * h.order());
        CHECK(disjoint_union(g, h).size() == g.size() + h.size());
      }
    }
  }

  TEST_CASE("G(i) construction") {
    const Graph paw = construct_gi(4, 1, 1);
    CHECK(paw.size() == 4);
    std::vector<int> degrees = degree_sequence(paw);
    std::sort(degrees.begin(), degrees.end());
    CHECK(degrees == std::vector<int>{1, 2, 2, 3});
    CHECK(construct_gi(5, 2, 1).size() == 8);

    for (int n = 2; n <= 10; ++n) {
      const Graph g = construct_gi(n, n - 1, 1);
      CHECK(g.size() == n * (n - 1) / 2);
      CHECK(q_spectrum(g).max_deviation(q_spectrum(complete(n))) <= 1e-8);
    }
    for (int n = 3; n <= 10; ++n) {
      for (int k = 1; k <= n - 2; ++k) {
        for (int i = 1; i <= (n - k) / 2; ++i) {
          const int r = n - k - i;
          CHECK(construct_gi(n, k, i).size() == k * (k - 1) / 2 + k * (n - k) + i * (i - 1) / 2 + r * (r - 1) / 2);
        }
      }
    }
    CHECK_THROWS_AS(construct_gi(5, 2, 0), GraphError);
    CHECK_THROWS_AS(construct_gi(5, 2, 2), GraphError);
    CHECK_THROWS_AS(construct_gi(5, 5, 1), GraphError);
    CHECK_THROWS_AS(construct_gi(5, 0, 1), GraphError);
  }

  TEST_CASE("connectivity, bipartition and degrees") {
    CHECK(is_connected(cycle(4)));
    CHECK(bipartition(cycle(4)) == std::pair{2, 2});
    CHECK(is_connected(complete(3)));
    CHECK_FALSE(bipartition(complete(3)).has_value());
    CHECK(degree_sequence(complete_bipartite(2, 3)) == std::vector<int>{3, 3, 2, 2, 2});
    CHECK_THROWS_AS(bipartition(disjoint_union(complete(2), complete(2))), GraphError);
  }

  TEST_CASE("degree sum equals 2m") {
    const Graph graphs[] = {complete(6), complete_bipartite(3, 4), construct_gi(7, 2, 2), path(5), cycle(7)};
    for (const Graph& g : graphs) {
      const auto d = degree_sequence(g);
      CHECK(std::accumulate(d.begin(), d.end(), 0) == 2 * g.size());
    }
  }

  TEST_CASE("bipartite iff no odd cycle, n <= 6 exhaustive") {
    for (int n = 1; n <= 6; ++n) {
      oracle::for_each_graph(n, [](const Graph& g) {
        const bool odd = oracle::has_odd_cycle(g);
        REQUIRE(is_bipartite(g) == !odd);
        REQUIRE(oracle::bipartite(g) == !odd);
      });
    }
  }

  TEST_CASE("bipartite iff no odd cycle, sampled n = 7, 8") {
    for (int n = 7; n <= 8; ++n) {
      const std::uint64_t stride = n == 7 ? 97 : 9973;
      std::vector<Edge> pairs;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); mask += stride) {
        std::vector<Edge> edges;
        for (std::size_t b = 0; b < pairs.size(); ++b)
          if (mask >> b & 1U) edges.push_back(pairs[b]);
        const Graph g(n, edges);
        REQUIRE(is_bipartite(g) == !oracle::has_odd_cycle(g));
        if (is_connected(g) && is_bipartite(g)) {
          const auto [r, s] = *bipartition(g);
          REQUIRE(r + s == n);
          REQUIRE(r <= s);
        }
      }
    }
  }
}
