#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_set>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

/// Incremental independence oracle for the generic 2D rigidity matroid.
///
/// Runs the (2,3) pebble game: every vertex owns two pebbles, each accepted
/// edge is oriented and pins one pebble of its tail. An edge uv is
/// independent of the accepted set iff four pebbles can be gathered on u and
/// v by reversing directed paths. The accepted set therefore stays (2,3)-sparse:
/// every nonempty subset E' spanning V' has |E'| <= 2|V'| - 3.
///
/// One insertion costs O(n); inserting all edges of a graph costs O(n*m).
class RigidityOracle {
 public:
  explicit RigidityOracle(std::size_t vertex_count);

  /// Processes e and reports whether it was added to the independent set.
  ///
  /// Throws Error(kIndexOutOfRange) for endpoints >= vertex_count() and
  /// Error(kDuplicateInsert) if e was processed before. A rejected edge leaves
  /// the independent set untouched.
  bool insert(Edge e);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t rank() const noexcept { return accepted_.size(); }

  /// Accepted edges in insertion order.
  std::span<const Edge> accepted() const noexcept { return accepted_; }
  /// Edges dependent on the accepted set at the time they were processed.
  std::span<const Edge> rejected() const noexcept { return rejected_; }

  /// Free pebbles currently on v (0, 1 or 2).
  int free_pebbles(VertexId v) const noexcept { return 2 - out_count_[v]; }

 private:
  bool gather_pebble(VertexId target, VertexId keep);
  void reverse_path(VertexId from);
  void add_out(VertexId tail, VertexId head);
  void remove_out(VertexId tail, VertexId head);

  std::size_t n_;
  // Pebble-game orientation: each vertex has at most two outgoing edges.
  std::vector<std::array<VertexId, 2>> out_;
  std::vector<std::uint8_t> out_count_;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> seen_;
  std::vector<VertexId> stack_;
  std::uint32_t stamp_ = 0;

  std::vector<Edge> accepted_;
  std::vector<Edge> rejected_;
  std::unordered_set<std::uint64_t> processed_;
};

}  // namespace rigidity
