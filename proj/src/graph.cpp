#include "rigidity/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>

#include "rigidity/error.hpp"

namespace rigidity {

namespace {

void check_edge(std::size_t n, std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || static_cast<std::uint64_t>(a) >= n ||
      static_cast<std::uint64_t>(b) >= n) {
    throw Error(Errc::kIndexOutOfRange,
                "edge (" + std::to_string(a) + ", " + std::to_string(b) +
                    ") has an endpoint outside [0, " + std::to_string(n) + ")");
  }
  if (a == b) {
    throw Error(Errc::kLoopEdge, "loop at vertex " + std::to_string(a));
  }
}

}  // namespace

Graph::Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    check_edge(n_, e.u, e.v);
    e = Edge::between(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Graph::has_edge(Edge e) const noexcept {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<std::vector<VertexId>> Graph::adjacency() const {
  std::vector<std::vector<VertexId>> adj(n_);
  for (const Edge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

Graph graph_from_edge_list(std::size_t n,
                           std::span<const std::pair<std::int64_t, std::int64_t>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    check_edge(n, a, b);
    edges.push_back(Edge::between(static_cast<VertexId>(a), static_cast<VertexId>(b)));
  }
  return Graph(n, std::move(edges));
}

Graph remove_edges(const Graph& g, std::span<const Edge> removed) {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (Edge& e : drop) {
    e = Edge::between(e.u, e.v);
    if (!g.has_edge(e)) {
      throw Error(Errc::kUnknownEdge, "edge (" + std::to_string(e.u) + ", " +
                                          std::to_string(e.v) + ") is not in the graph");
    }
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(g.edge_count());
  std::set_difference(g.edges().begin(), g.edges().end(), drop.begin(), drop.end(),
                      std::back_inserter(kept));
  return Graph(g.vertex_count(), std::move(kept));
}

Graph add_edges(const Graph& g, std::span<const Edge> added) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.insert(edges.end(), added.begin(), added.end());
  return Graph(g.vertex_count(), std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  edges.reserve(n * (n - (n > 0)) / 2);
  for (VertexId i = 0; i < n; ++i) {
    for (VertexId j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  const auto adj = g.adjacency();
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

int local_vertex_connectivity(const Graph& g, VertexId s, VertexId t, int cap) {
  // Vertex-split network: v_in = 2v, v_out = 2v + 1. Internal arcs carry unit
  // capacity except at s and t; every graph edge becomes two unit arcs
  // u_out -> v_in and v_out -> u_in. Unit augmenting paths via BFS.
  const std::size_t n = g.vertex_count();
  struct Arc {
    std::uint32_t to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::uint32_t>> out(2 * n);
  auto add_arc = [&](std::uint32_t a, std::uint32_t b, int c) {
    out[a].push_back(static_cast<std::uint32_t>(arcs.size()));
    arcs.push_back({b, c});
    out[b].push_back(static_cast<std::uint32_t>(arcs.size()));
    arcs.push_back({a, 0});
  };
  const int big = std::numeric_limits<int>::max() / 4;
  for (VertexId v = 0; v < n; ++v) {
    add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  }
  for (const Edge& e : g.edges()) {
    add_arc(2 * e.u + 1, 2 * e.v, 1);
    add_arc(2 * e.v + 1, 2 * e.u, 1);
  }

  const std::uint32_t source = 2 * s + 1;
  const std::uint32_t sink = 2 * t;
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> via(2 * n);
  int flow = 0;
  while (flow < cap) {
    std::fill(via.begin(), via.end(), kNone);
    std::deque<std::uint32_t> queue{source};
    via[source] = kNone - 1;
    while (!queue.empty() && via[sink] == kNone) {
      const std::uint32_t x = queue.front();
      queue.pop_front();
      for (std::uint32_t a : out[x]) {
        if (arcs[a].cap > 0 && via[arcs[a].to] == kNone) {
          via[arcs[a].to] = a;
          queue.push_back(arcs[a].to);
        }
      }
    }
    if (via[sink] == kNone) break;
    for (std::uint32_t x = sink; x != source;) {
      const std::uint32_t a = via[x];
      arcs[a].cap -= 1;
      arcs[a ^ 1U].cap += 1;
      x = arcs[a ^ 1U].to;
    }
    ++flow;
  }
  return flow;
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw Error(Errc::kIndexOutOfRange, "connectivity order must be >= 1");
  const std::size_t n = g.vertex_count();
  if (n <= static_cast<std::size_t>(k)) return false;
  if (!is_connected(g)) return false;
  if (k == 1) return true;
  // Minimum over non-adjacent pairs of the local connectivity; a complete
  // graph has none and is (n-1)-connected.
  for (VertexId s = 0; s < n; ++s) {
    for (VertexId t = s + 1; t < n; ++t) {
      if (g.has_edge({s, t})) continue;
      if (local_vertex_connectivity(g, s, t, k) < k) return false;
    }
  }
  return true;
}

}  // namespace rigidity
