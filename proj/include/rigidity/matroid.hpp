#pragma once

#include <cstddef>
#include <vector>

#include "rigidity/graph.hpp"

namespace rigidity {

/// Size of a maximum independent edge set of g in the 2D rigidity matroid.
/// Any insertion order gives the same value.
std::size_t matroid_rank(const Graph& g);

/// Greedy basis in canonical edge order. Only its size and independence are
/// meaningful; it is one witness among many.
std::vector<Edge> independent_basis(const Graph& g);

/// True iff the whole edge set of g is (2,3)-sparse.
bool is_independent(const Graph& g);

/// rank == 2n - 3. Graphs on at most one vertex are rigid by convention.
bool is_rigid(const Graph& g);

/// Laman: |E| == 2n - 3 and E independent. False for n < 2.
bool is_minimally_rigid(const Graph& g);

/// Largest rank a graph on n vertices can reach: max(2n - 3, 0).
constexpr std::size_t full_rank(std::size_t n) noexcept {
  return n >= 2 ? 2 * n - 3 : 0;
}

}  // namespace rigidity
