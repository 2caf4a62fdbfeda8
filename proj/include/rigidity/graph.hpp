#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rigidity {

using VertexId = std::uint32_t;

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  /// Canonical (min, max) edge. Caller guarantees a != b.
  static constexpr Edge between(VertexId a, VertexId b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// The edge list is kept sorted and duplicate-free, so two graphs with the
/// same vertex count and the same edge set compare equal. Isolated vertices
/// are allowed and count toward vertex_count(). Instances are immutable.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n) : n_(n) {}

  /// Builds from canonical edges; throws on loops, range or duplicates.
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  bool has_edge(Edge e) const noexcept;

  /// Adjacency lists, rebuilt on each call.
  std::vector<std::vector<VertexId>> adjacency() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// Canonicalizes and deduplicates an endpoint list.
///
/// Throws Error(kIndexOutOfRange) for endpoints outside [0, n) and
/// Error(kLoopEdge) for a pair with equal endpoints.
Graph graph_from_edge_list(std::size_t n,
                           std::span<const std::pair<std::int64_t, std::int64_t>> pairs);

/// g with the edges of `removed` deleted. Throws Error(kUnknownEdge) if an
/// element of `removed` is not an edge of g.
Graph remove_edges(const Graph& g, std::span<const Edge> removed);

/// g plus the given edges (duplicates of existing edges are ignored).
Graph add_edges(const Graph& g, std::span<const Edge> added);

Graph complete_graph(std::size_t n);

/// True iff g has more than k vertices and no set of fewer than k vertices
/// disconnects it. K_{k+1} is k-connected. Requires k >= 1.
bool is_k_connected(const Graph& g, int k);

/// Number of internally vertex-disjoint s-t paths, stopping once `cap` is
/// reached. s and t must be distinct and non-adjacent.
int local_vertex_connectivity(const Graph& g, VertexId s, VertexId t, int cap);

bool is_connected(const Graph& g);

}  // namespace rigidity
