#include "qpow/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "qpow/error.hpp"

namespace qpow {

namespace {

// Small dense max-flow network. Node count is at most 2 * kMaxVertices.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes)
      : nodes_(nodes), capacity_(static_cast<std::size_t>(nodes) * static_cast<std::size_t>(nodes), 0) {}

  void add_arc(int from, int to, int cap) { capacity_[index(from, to)] += cap; }

  // Augments along shortest paths until none remain or `limit` units have been pushed.
  int max_flow(int source, int sink, int limit = std::numeric_limits<int>::max()) {
    int flow = 0;
    std::vector<int> parent(static_cast<std::size_t>(nodes_));
    std::vector<int> queue(static_cast<std::size_t>(nodes_));
    while (flow < limit) {
      std::fill(parent.begin(), parent.end(), -1);
      parent[static_cast<std::size_t>(source)] = source;
      std::size_t head = 0;
      std::size_t tail = 0;
      queue[tail++] = source;
      while (head < tail && parent[static_cast<std::size_t>(sink)] < 0) {
        const int u = queue[head++];
        for (int v = 0; v < nodes_; ++v) {
          if (parent[static_cast<std::size_t>(v)] < 0 && capacity_[index(u, v)] > 0) {
            parent[static_cast<std::size_t>(v)] = u;
            queue[tail++] = v;
          }
        }
      }
      if (parent[static_cast<std::size_t>(sink)] < 0) break;
      // One unit per augmenting path.
      for (int v = sink; v != source; v = parent[static_cast<std::size_t>(v)]) {
        const int u = parent[static_cast<std::size_t>(v)];
        capacity_[index(u, v)] -= 1;
        capacity_[index(v, u)] += 1;
      }
      ++flow;
    }
    return flow;
  }

  // Nodes reachable from `source` in the residual network.
  std::vector<bool> reachable(int source) const {
    std::vector<bool> seen(static_cast<std::size_t>(nodes_), false);
    std::vector<int> stack{source};
    seen[static_cast<std::size_t>(source)] = true;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < nodes_; ++v) {
        if (!seen[static_cast<std::size_t>(v)] && capacity_[index(u, v)] > 0) {
          seen[static_cast<std::size_t>(v)] = true;
          stack.push_back(v);
        }
      }
    }
    return seen;
  }

 private:
  std::size_t index(int from, int to) const {
    return static_cast<std::size_t>(from) * static_cast<std::size_t>(nodes_) +
           static_cast<std::size_t>(to);
  }

  int nodes_;
  std::vector<int> capacity_;
};

int in_node(int v) { return 2 * v; }
int out_node(int v) { return 2 * v + 1; }

// Split-vertex network for s-t vertex cuts: v_in -> v_out carries one unit for every
// vertex other than s and t.
VertexCut local_vertex_cut(const Graph& g, int s, int t) {
  const int n = g.order();
  const int big = n + 1;
  FlowNetwork net(2 * n);
  for (int v = 0; v < n; ++v) {
    net.add_arc(in_node(v), out_node(v), (v == s || v == t) ? big : 1);
  }
  for (const auto& [u, v] : g.edges()) {
    net.add_arc(out_node(u), in_node(v), big);
    net.add_arc(out_node(v), in_node(u), big);
  }
  VertexCut out;
  out.kappa = net.max_flow(out_node(s), in_node(t));
  const auto side = net.reachable(out_node(s));
  for (int v = 0; v < n; ++v) {
    if (side[static_cast<std::size_t>(in_node(v))] && !side[static_cast<std::size_t>(out_node(v))]) {
      out.cut.push_back(v);
    }
  }
  return out;
}

EdgeCut local_edge_cut(const Graph& g, int s, int t) {
  FlowNetwork net(g.order());
  for (const auto& [u, v] : g.edges()) {
    net.add_arc(u, v, 1);
    net.add_arc(v, u, 1);
  }
  EdgeCut out;
  out.epsilon = net.max_flow(s, t);
  const auto side = net.reachable(s);
  for (const auto& [u, v] : g.edges()) {
    if (side[static_cast<std::size_t>(u)] != side[static_cast<std::size_t>(v)]) {
      out.cut.emplace_back(u, v);
    }
  }
  return out;
}

bool is_complete(const Graph& g) {
  return g.size() == g.order() * (g.order() - 1) / 2;
}

}  // namespace

int local_vertex_connectivity(const Graph& g, int s, int t) {
  if (s == t || g.has_edge(s, t)) {
    throw GraphError("local vertex connectivity needs distinct non-adjacent vertices");
  }
  return local_vertex_cut(g, s, t).kappa;
}

VertexCut vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) return {};
  if (is_complete(g)) {
    VertexCut out{n - 1, {}};
    for (int v = 1; v < n; ++v) out.cut.push_back(v);
    return out;
  }

  // Any fixed vertex works; a minimum-degree one keeps the candidate list short.
  int pivot = 0;
  for (int v = 1; v < n; ++v) {
    if (g.degree(v) < g.degree(pivot)) pivot = v;
  }

  VertexCut best{n, {}};
  auto consider = [&](int s, int t) {
    VertexCut c = local_vertex_cut(g, s, t);
    if (c.kappa < best.kappa) best = std::move(c);
  };

  const std::uint64_t closed = g.row(pivot) | (std::uint64_t{1} << pivot);
  std::uint64_t far = g.vertex_mask() & ~closed;
  while (far != 0) {
    consider(pivot, std::countr_zero(far));
    far &= far - 1;
  }
  std::uint64_t nbrs = g.row(pivot);
  while (nbrs != 0) {
    const int x = std::countr_zero(nbrs);
    nbrs &= nbrs - 1;
    std::uint64_t others = nbrs & ~g.row(x);
    while (others != 0) {
      consider(x, std::countr_zero(others));
      others &= others - 1;
    }
  }
  return best;
}

EdgeCut edge_connectivity(const Graph& g) {
  if (g.order() == 1 || !is_connected(g)) return {};
  EdgeCut best{g.order(), {}};
  for (int t = 1; t < g.order(); ++t) {
    EdgeCut c = local_edge_cut(g, 0, t);
    if (c.epsilon < best.epsilon) best = std::move(c);
  }
  return best;
}

ConnectivityProfile connectivity_profile(const Graph& g) {
  VertexCut vc = vertex_connectivity(g);
  EdgeCut ec = edge_connectivity(g);
  return {vc.kappa, ec.epsilon, std::move(vc.cut), std::move(ec.cut)};
}

bool kappa_at_most(const Graph& g, int k) {
  if (k < 1 || k > g.order() - 1) {
    throw GraphError("k = " + std::to_string(k) + " outside [1, " +
                     std::to_string(g.order() - 1) + "]");
  }
  return vertex_connectivity(g).kappa <= k;
}

int vertex_connectivity_exhaustive(const Graph& g) {
  const int n = g.order();
  if (!is_connected(g)) return 0;
  const std::uint64_t all = g.vertex_mask();
  for (int size = 1; size <= n - 2; ++size) {
    // Gosper's hack over all size-element subsets of {0..n-1}.
    std::uint64_t subset = (std::uint64_t{1} << size) - 1;
    while (subset <= all) {
      const std::uint64_t keep = all & ~subset;
      const int root = std::countr_zero(keep);
      std::uint64_t seen = std::uint64_t{1} << root;
      std::uint64_t frontier = seen;
      while (frontier != 0) {
        std::uint64_t next = 0;
        while (frontier != 0) {
          const int v = std::countr_zero(frontier);
          frontier &= frontier - 1;
          next |= g.row(v) & keep;
        }
        frontier = next & ~seen;
        seen |= next;
      }
      if (seen != keep) return size;
      const std::uint64_t low = subset & (~subset + 1);
      const std::uint64_t ripple = subset + low;
      subset = (((ripple ^ subset) >> 2) / low) | ripple;
    }
  }
  return n - 1;
}

}  // namespace qpow
