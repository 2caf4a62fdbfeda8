#include "rigidity/indices.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "parallel.hpp"
#include "rigidity/error.hpp"
#include "rigidity/matroid.hpp"
#include "rigidity/pebble_game.hpp"

namespace rigidity {

namespace {

// Greedy basis B of g and the remaining edges. Removing a set S keeps the rank
// iff the independent set B \ S extends, inside E \ S, back to |B| edges
// (matroid augmentation), so only S that meet B need an oracle run.
struct BasisSplit {
  std::size_t n = 0;
  std::vector<Edge> basis;
  std::vector<Edge> others;
};

BasisSplit split_by_basis(const Graph& g) {
  BasisSplit split;
  split.n = g.vertex_count();
  split.basis = independent_basis(g);
  std::vector<Edge> sorted_basis = split.basis;
  std::sort(sorted_basis.begin(), sorted_basis.end());
  std::set_difference(g.edges().begin(), g.edges().end(), sorted_basis.begin(),
                      sorted_basis.end(), std::back_inserter(split.others));
  return split;
}

bool contains(std::span<const Edge> sorted, Edge e) {
  return std::binary_search(sorted.begin(), sorted.end(), e);
}

// `removed` must be sorted.
bool preserves_rank(const BasisSplit& split, std::span<const Edge> removed) {
  const bool hits_basis = std::any_of(split.basis.begin(), split.basis.end(),
                                      [&](Edge b) { return contains(removed, b); });
  if (!hits_basis) return true;

  RigidityOracle oracle(split.n);
  for (const Edge& b : split.basis) {
    if (!contains(removed, b)) oracle.insert(b);
  }
  const std::size_t target = split.basis.size();
  for (const Edge& f : split.others) {
    if (contains(removed, f)) continue;
    if (oracle.insert(f) && oracle.rank() == target) return true;
  }
  return false;
}

std::vector<Edge> sorted_subset_of(const Graph& g, std::span<const Edge> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (Edge e : edges) {
    e = Edge::between(e.u, e.v);
    if (!g.has_edge(e)) {
      throw Error(Errc::kUnknownEdge, "edge (" + std::to_string(e.u) + ", " +
                                          std::to_string(e.v) + ") is not in the graph");
    }
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

RatioValue index_from_rank(std::size_t n, std::size_t rank) {
  if (n <= 1) return RatioValue(1, 1);
  return RatioValue(static_cast<std::int64_t>(rank), static_cast<std::int64_t>(2 * n - 3));
}

std::vector<Edge> redundant_edges_of(const BasisSplit& split) {
  std::vector<char> keeps(split.basis.size(), 0);
  detail::parallel_for(split.basis.size(), [&](std::size_t i) {
    const Edge e = split.basis[i];
    keeps[i] = preserves_rank(split, std::span<const Edge>(&e, 1)) ? 1 : 0;
  });
  std::vector<Edge> redundant = split.others;
  for (std::size_t i = 0; i < split.basis.size(); ++i) {
    if (keeps[i]) redundant.push_back(split.basis[i]);
  }
  std::sort(redundant.begin(), redundant.end());
  return redundant;
}

std::uint64_t binomial(std::uint64_t m, std::uint64_t k) {
  if (k > m) return 0;
  k = std::min(k, m - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result = static_cast<std::uint64_t>(static_cast<unsigned __int128>(result) * (m - k + i) / i);
  }
  return result;
}

}  // namespace

RatioValue rigidity_index(const Graph& g) {
  return index_from_rank(g.vertex_count(), matroid_rank(g));
}

bool rank_preserved_without(const Graph& g, std::span<const Edge> removed) {
  const auto sorted = sorted_subset_of(g, removed);
  return preserves_rank(split_by_basis(g), sorted);
}

bool is_generalized_redundant(const Graph& g, Edge e) {
  return rank_preserved_without(g, std::span<const Edge>(&e, 1));
}

std::vector<Edge> redundant_edge_set(const Graph& g) {
  return redundant_edges_of(split_by_basis(g));
}

RatioValue redundancy_index(const Graph& g) {
  if (g.edge_count() == 0) return RatioValue(0, 1);
  return RatioValue(static_cast<std::int64_t>(redundant_edge_set(g).size()),
                    static_cast<std::int64_t>(g.edge_count()));
}

RatioValue redundancy_index_k(const Graph& g, int k) {
  const auto split = split_by_basis(g);
  const std::size_t m = g.edge_count();
  const std::size_t slack = m - split.basis.size();
  if (k < 1 || static_cast<std::size_t>(k) > slack) {
    throw Error(Errc::kKOutOfRange,
                "k = " + std::to_string(k) + " outside [1, " + std::to_string(slack) +
                    "] (|E| - rank)");
  }
  const auto uk = static_cast<std::size_t>(k);
  const std::uint64_t total = binomial(m, uk);
  const auto edges = g.edges();

  // Partition by the smallest index of the subset so workers own disjoint
  // slices of the lexicographic enumeration.
  const std::size_t firsts = m - uk + 1;
  std::vector<std::uint64_t> counts(firsts, 0);
  detail::parallel_for(firsts, [&](std::size_t first) {
    std::vector<std::size_t> idx(uk);
    std::iota(idx.begin(), idx.end(), first);
    std::vector<Edge> subset(uk);
    std::uint64_t count = 0;
    while (true) {
      for (std::size_t i = 0; i < uk; ++i) subset[i] = edges[idx[i]];
      if (preserves_rank(split, subset)) ++count;
      // Advance positions 1..k-1, keeping idx[0] == first.
      std::size_t pos = uk;
      while (pos > 1 && idx[pos - 1] == m - uk + pos - 1) --pos;
      if (pos <= 1) break;
      ++idx[pos - 1];
      for (std::size_t i = pos; i < uk; ++i) idx[i] = idx[i - 1] + 1;
    }
    counts[first] = count;
  });
  const std::uint64_t preserved = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  return RatioValue(static_cast<std::int64_t>(preserved), static_cast<std::int64_t>(total));
}

RigidityRedundancy rigidity_and_redundancy(const Graph& g) {
  const auto split = split_by_basis(g);
  RigidityRedundancy out;
  out.k_r = index_from_rank(g.vertex_count(), split.basis.size());
  if (g.edge_count() > 0) {
    out.k_u = RatioValue(static_cast<std::int64_t>(redundant_edges_of(split).size()),
                         static_cast<std::int64_t>(g.edge_count()));
  }
  return out;
}

IndexReport analyze(const Graph& g, std::optional<int> with_k) {
  const auto split = split_by_basis(g);
  const std::size_t n = g.vertex_count();
  IndexReport r;
  r.n = n;
  r.m = g.edge_count();
  r.rank = split.basis.size();
  r.k_r = index_from_rank(n, r.rank);
  r.redundant_edges = redundant_edges_of(split);
  if (r.m > 0) {
    r.k_u = RatioValue(static_cast<std::int64_t>(r.redundant_edges.size()),
                       static_cast<std::int64_t>(r.m));
  }
  r.rigid = n <= 1 || r.rank == full_rank(n);
  r.minimally_rigid = n >= 2 && r.m == full_rank(n) && r.rank == r.m;
  r.redundantly_rigid = r.rigid && r.m > 0 && r.redundant_edges.size() == r.m;
  r.three_connected = is_k_connected(g, 3);
  r.globally_rigid = r.three_connected && r.redundantly_rigid;
  if (with_k) {
    r.k = with_k;
    try {
      r.k_u_k = redundancy_index_k(g, *with_k);
    } catch (const Error& e) {
      if (e.code() != Errc::kKOutOfRange) throw;
      r.k_error = e.what();
    }
  }
  return r;
}

}  // namespace rigidity
