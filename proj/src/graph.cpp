#include "qpow/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qpow/error.hpp"

namespace qpow {

namespace {

std::uint64_t low_bits(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void check_order(int n) {
  if (n < 1 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [1, " +
                     std::to_string(kMaxVertices) + "]");
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
      throw GraphError("self-loop at vertex " + std::to_string(u));
    }
    if (!has_edge(u, v)) {
      set_edge(u, v);
    }
  }
}

Graph Graph::empty(int n) { return Graph(n); }

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw GraphError("vertex " + std::to_string(v) + " outside [0, " + std::to_string(n_) + ")");
  }
}

void Graph::set_edge(int u, int v) noexcept {
  rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  ++m_;
}

void Graph::clear_edge(int u, int v) noexcept {
  rows_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
  rows_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
  --m_;
}

bool Graph::has_edge(int u, int v) const noexcept {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
  return (rows_[static_cast<std::size_t>(u)] >> v) & 1U;
}

int Graph::degree(int v) const noexcept { return std::popcount(row(v)); }

std::uint64_t Graph::vertex_mask() const noexcept { return low_bits(n_); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(static_cast<std::size_t>(m_));
  for (int u = 0; u < n_; ++u) {
    std::uint64_t higher = row(u) & ~low_bits(u + 1);
    while (higher != 0) {
      const int v = std::countr_zero(higher);
      out.emplace_back(u, v);
      higher &= higher - 1;
    }
  }
  return out;
}

Graph Graph::without_edge(Edge e) const {
  if (!has_edge(e.first, e.second)) {
    throw GraphError("(" + std::to_string(e.first) + "," + std::to_string(e.second) +
                     ") is not an edge");
  }
  Graph out = *this;
  out.clear_edge(e.first, e.second);
  return out;
}

Graph Graph::with_edge(Edge e) const {
  check_vertex(e.first);
  check_vertex(e.second);
  if (e.first == e.second) {
    throw GraphError("self-loop at vertex " + std::to_string(e.first));
  }
  if (has_edge(e.first, e.second)) {
    throw GraphError("(" + std::to_string(e.first) + "," + std::to_string(e.second) +
                     ") is already an edge");
  }
  Graph out = *this;
  out.set_edge(e.first, e.second);
  return out;
}

Graph complete(int n) {
  check_order(n);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph complete_bipartite(int r, int s) {
  if (r < 1 || s < 1) {
    throw GraphError("complete_bipartite needs positive part sizes");
  }
  return join(Graph::empty(r), Graph::empty(s));
}

Graph path(int n) {
  check_order(n);
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.order();
  std::vector<Edge> edges = g.edges();
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + offset, v + offset);
  return Graph(g.order() + h.order(), edges);
}

Graph join(const Graph& g, const Graph& h) {
  const int offset = g.order();
  std::vector<Edge> edges = g.edges();
  for (const auto& [u, v] : h.edges()) edges.emplace_back(u + offset, v + offset);
  for (int u = 0; u < g.order(); ++u) {
    for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + offset);
  }
  return Graph(g.order() + h.order(), edges);
}

int gi_max_index(int n, int k) {
  if (k < 1 || k > n - 1) {
    throw GraphError("G(i) needs 1 <= k <= n-1, got n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
  }
  return k == n - 1 ? 1 : (n - k) / 2;
}

Graph construct_gi(int n, int k, int i) {
  const int max_i = gi_max_index(n, k);
  if (i < 1 || i > max_i) {
    throw GraphError("G(i) index " + std::to_string(i) + " outside [1, " +
                     std::to_string(max_i) + "] for n=" + std::to_string(n) +
                     ", k=" + std::to_string(k));
  }
  const int rest = n - k - i;
  const Graph sides = rest == 0 ? complete(i) : disjoint_union(complete(i), complete(rest));
  return join(complete(k), sides);
}

bool is_connected(const Graph& g) {
  const std::uint64_t all = g.vertex_mask();
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    while (frontier != 0) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      next |= g.row(v);
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all;
}

namespace {

// Colour bitmask of a proper 2-colouring, or nullopt on an odd cycle. Each
// component's lowest vertex gets colour 0.
std::optional<std::uint64_t> two_colouring(const Graph& g) {
  std::uint64_t unvisited = g.vertex_mask();
  std::uint64_t colour_one = 0;
  while (unvisited != 0) {
    const int root = std::countr_zero(unvisited);
    std::uint64_t side[2] = {std::uint64_t{1} << root, 0};
    std::uint64_t frontier = side[0];
    int c = 0;
    while (frontier != 0) {
      std::uint64_t next = 0;
      while (frontier != 0) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.row(v);
      }
      if ((next & side[c]) != 0) return std::nullopt;
      c ^= 1;
      frontier = next & ~side[c];
      side[c] |= next;
    }
    if ((side[0] & side[1]) != 0) return std::nullopt;
    colour_one |= side[1];
    unvisited &= ~(side[0] | side[1]);
  }
  return colour_one;
}

}  // namespace

bool is_bipartite(const Graph& g) { return two_colouring(g).has_value(); }

std::optional<std::pair<int, int>> bipartition(const Graph& g) {
  if (!is_connected(g)) {
    throw GraphError("bipartition is ambiguous on a disconnected graph");
  }
  const auto colours = two_colouring(g);
  if (!colours) return std::nullopt;
  const int ones = std::popcount(*colours);
  const int zeros = g.order() - ones;
  return std::pair{std::min(ones, zeros), std::max(ones, zeros)};
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) out[static_cast<std::size_t>(v)] = g.degree(v);
  return out;
}

int min_degree(const Graph& g) {
  int best = g.order();
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
  return best;
}

}  // namespace qpow
