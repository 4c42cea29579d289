#pragma once

#include <vector>

#include "qpow/graph.hpp"

namespace qpow {

struct VertexCut {
  int kappa = 0;
  /// Minimum separating vertex set; for K_n the n-1 vertices 1..n-1.
  std::vector<int> cut;
};

struct EdgeCut {
  int epsilon = 0;
  std::vector<Edge> cut;
};

struct ConnectivityProfile {
  int kappa = 0;
  int epsilon = 0;
  std::vector<int> witness_vertex_cut;
  std::vector<Edge> witness_edge_cut;
};

/// Exact vertex connectivity via unit-capacity max-flow on the split-vertex network.
/// Disconnected graphs give 0 with an empty cut; K_n gives n-1.
VertexCut vertex_connectivity(const Graph& g);

/// Exact edge connectivity via edge max-flow from vertex 0 to every other vertex.
EdgeCut edge_connectivity(const Graph& g);

ConnectivityProfile connectivity_profile(const Graph& g);

/// kappa(g) <= k. Throws GraphError unless 1 <= k <= n-1.
bool kappa_at_most(const Graph& g, int k);

/// Minimum number of internally disjoint s-t paths; s and t must be non-adjacent.
int local_vertex_connectivity(const Graph& g, int s, int t);

/// Reference kappa: smallest vertex subset whose removal leaves a disconnected graph.
/// Exponential; intended for n <= ~12.
int vertex_connectivity_exhaustive(const Graph& g);

}  // namespace qpow
