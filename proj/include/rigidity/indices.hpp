#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/ratio.hpp"

namespace rigidity {

/// rank / (2n - 3). Equals 1 for graphs on at most one vertex.
RatioValue rigidity_index(const Graph& g);

/// True iff removing e leaves the rigidity-matroid rank unchanged.
/// Throws Error(kUnknownEdge) if e is not an edge of g.
bool is_generalized_redundant(const Graph& g, Edge e);

/// All generalized redundant edges of g, in canonical edge order.
std::vector<Edge> redundant_edge_set(const Graph& g);

/// |redundant_edge_set(g)| / |E|, and 0 for an edgeless graph.
RatioValue redundancy_index(const Graph& g);

/// Fraction of the C(|E|, k) edge k-subsets whose removal keeps the rank.
/// Throws Error(kKOutOfRange) unless 1 <= k <= |E| - rank.
RatioValue redundancy_index_k(const Graph& g, int k);

/// Rank-preservation test shared by the redundancy indices: is
/// rank(g - removed) == rank(g)? `removed` must be a subset of g's edges.
bool rank_preserved_without(const Graph& g, std::span<const Edge> removed);

/// K_r and K_u together, sharing one basis computation.
struct RigidityRedundancy {
  RatioValue k_r;
  RatioValue k_u;
};
RigidityRedundancy rigidity_and_redundancy(const Graph& g);

struct IndexReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t rank = 0;
  RatioValue k_r;
  std::vector<Edge> redundant_edges;
  RatioValue k_u;
  bool rigid = false;
  bool minimally_rigid = false;
  bool redundantly_rigid = false;
  bool three_connected = false;
  bool globally_rigid = false;

  /// Requested order of the higher redundancy index, if any.
  std::optional<int> k;
  /// Set when k was requested and in range.
  std::optional<RatioValue> k_u_k;
  /// Set when k was requested but out of range; the core fields stay valid.
  std::optional<std::string> k_error;

  friend bool operator==(const IndexReport&, const IndexReport&) = default;
};

IndexReport analyze(const Graph& g, std::optional<int> with_k = std::nullopt);

}  // namespace rigidity
