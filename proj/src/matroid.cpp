#include "rigidity/matroid.hpp"

#include "rigidity/pebble_game.hpp"

namespace rigidity {

std::vector<Edge> independent_basis(const Graph& g) {
  RigidityOracle oracle(g.vertex_count());
  const std::size_t cap = full_rank(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (oracle.rank() == cap) break;
    oracle.insert(e);
  }
  return {oracle.accepted().begin(), oracle.accepted().end()};
}

std::size_t matroid_rank(const Graph& g) { return independent_basis(g).size(); }

bool is_independent(const Graph& g) {
  RigidityOracle oracle(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (!oracle.insert(e)) return false;
  }
  return true;
}

bool is_rigid(const Graph& g) {
  if (g.vertex_count() <= 1) return true;
  return matroid_rank(g) == full_rank(g.vertex_count());
}

bool is_minimally_rigid(const Graph& g) {
  const std::size_t n = g.vertex_count();
  return n >= 2 && g.edge_count() == full_rank(n) && is_independent(g);
}

}  // namespace rigidity
