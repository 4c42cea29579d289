#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace qpow {

/// Hard cap on the vertex count. Rows of the adjacency relation are 64-bit masks.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is a dense symmetric bit relation: bit v of row(u) is set iff uv is an
/// edge. All mutators return a new value.
class Graph {
 public:
  /// Throws GraphError for n outside [1, kMaxVertices], out-of-range endpoints, or
  /// self-loops. Duplicate pairs (in either orientation) collapse to one edge.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Edgeless graph on n vertices.
  static Graph empty(int n);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool has_edge(int u, int v) const noexcept;
  std::uint64_t row(int v) const noexcept { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const noexcept;
  std::uint64_t vertex_mask() const noexcept;

  /// Edges (u, v) with u < v, ordered by u then v.
  std::vector<Edge> edges() const;

  /// G - e. Throws GraphError if e is not an edge.
  Graph without_edge(Edge e) const;
  /// G + e. Throws GraphError if e is already an edge or invalid.
  Graph with_edge(Edge e) const;

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  explicit Graph(int n);
  void check_vertex(int v) const;
  void set_edge(int u, int v) noexcept;
  void clear_edge(int u, int v) noexcept;

  int n_ = 0;
  int m_ = 0;
  std::array<std::uint64_t, kMaxVertices> rows_{};
};

Graph complete(int n);
Graph complete_bipartite(int r, int s);
Graph path(int n);
Graph cycle(int n);

/// G ∨ H: H's vertices are relabelled by offset G.order(), then every G-H pair is joined.
Graph join(const Graph& g, const Graph& h);
/// G ∪ H with H relabelled by offset G.order().
Graph disjoint_union(const Graph& g, const Graph& h);

/// K_k ∨ (K_i ∪ K_{n-k-i}).
///
/// Requires 1 <= k <= n-1 and 1 <= i <= floor((n-k)/2). The one exception is
/// k = n-1, i = 1, where the second clique is empty and the result is K_n.
Graph construct_gi(int n, int k, int i);
/// Largest admissible i for construct_gi(n, k, ·).
int gi_max_index(int n, int k);

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);

/// Part sizes (r, s), r <= s, of the proper 2-colouring of a connected graph, or
/// nullopt if it contains an odd cycle. Throws GraphError on disconnected input since
/// the split is not unique there.
std::optional<std::pair<int, int>> bipartition(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);
int min_degree(const Graph& g);

}  // namespace qpow
