#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "rigidity/graph.hpp"

namespace rigidity {

struct RationalPoint {
  mpq_class x;
  mpq_class y;
};

/// One exact planar point per vertex.
using Configuration = std::vector<RationalPoint>;

/// |E| x 2|V| matrix of coordinate differences, row-major.
///
/// Row r belongs to edge (i, j): columns 2i, 2i+1 hold p(i) - p(j) and
/// columns 2j, 2j+1 hold p(j) - p(i). Every other entry is zero.
class RigidityMatrix {
 public:
  RigidityMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  mpq_class& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const mpq_class& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<mpq_class> entries_;
};

/// Throws Error(kSizeMismatch) unless p has exactly g.vertex_count() points.
RigidityMatrix rigidity_matrix(const Graph& g, const Configuration& p);

/// Exact rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t matrix_rank(const RigidityMatrix& m);

/// Integer coordinates uniform on [0, 2^31), drawn x then y per vertex from
/// std::mt19937_64 seeded with `seed` (top 31 bits of each output).
Configuration random_integer_configuration(std::size_t n, std::uint64_t seed);

/// Rank of R(G, p) maximized over two independent random integer
/// configurations (seed and seed ^ 0x9e3779b97f4a7c15). A random draw can only
/// underestimate the generic rank.
std::size_t generic_rank(const Graph& g, std::uint64_t seed);

/// rank R(G, p) == 2n - 3. Throws Error(kSizeMismatch) like rigidity_matrix.
bool is_infinitesimally_rigid(const Graph& g, const Configuration& p);

}  // namespace rigidity
