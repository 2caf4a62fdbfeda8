#include "rigidity/numeric_oracle.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <utility>

#include "rigidity/error.hpp"
#include "rigidity/matroid.hpp"

namespace rigidity {

namespace {

void check_size(const Graph& g, const Configuration& p) {
  if (p.size() != g.vertex_count()) {
    throw Error(Errc::kSizeMismatch, "configuration has " + std::to_string(p.size()) +
                                         " points for " +
                                         std::to_string(g.vertex_count()) + " vertices");
  }
}

// Fraction-free Gaussian elimination with row pivoting. After the pivot at
// step k every remaining entry equals a (k+1)-minor of the input, so each
// division by the previous pivot is exact.
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  mpz_class lhs;
  mpz_class rhs;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    const auto& top = a[rank];
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto& row = a[i];
      for (std::size_t j = c + 1; j < cols; ++j) {
        lhs = top[c] * row[j];
        rhs = row[c] * top[j];
        lhs -= rhs;
        mpz_divexact(row[j].get_mpz_t(), lhs.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = top[c];
    ++rank;
  }
  return rank;
}

}  // namespace

RigidityMatrix rigidity_matrix(const Graph& g, const Configuration& p) {
  check_size(g, p);
  RigidityMatrix m(g.edge_count(), 2 * g.vertex_count());
  std::size_t r = 0;
  for (const Edge& e : g.edges()) {
    const mpq_class dx = p[e.u].x - p[e.v].x;
    const mpq_class dy = p[e.u].y - p[e.v].y;
    m.at(r, 2 * e.u) = dx;
    m.at(r, 2 * e.u + 1) = dy;
    m.at(r, 2 * e.v) = -dx;
    m.at(r, 2 * e.v + 1) = -dy;
    ++r;
  }
  return m;
}

std::size_t matrix_rank(const RigidityMatrix& m) {
  // Clear denominators row by row; scaling a row never changes the rank.
  std::vector<std::vector<mpz_class>> rows(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class scale = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m.at(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const mpq_class& q = m.at(r, c);
      rows[r][c] = q.get_num() * (scale / q.get_den());
    }
  }
  return bareiss_rank(std::move(rows), m.cols());
}

Configuration random_integer_configuration(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Configuration p(n);
  for (auto& point : p) {
    point.x = static_cast<unsigned long>(rng() >> 33);
    point.y = static_cast<unsigned long>(rng() >> 33);
  }
  return p;
}

std::size_t generic_rank(const Graph& g, std::uint64_t seed) {
  const std::size_t bound = std::min(g.edge_count(), full_rank(g.vertex_count()));
  std::size_t best = 0;
  for (const std::uint64_t draw : {seed, std::uint64_t{seed ^ 0x9e3779b97f4a7c15ULL}}) {
    const auto p = random_integer_configuration(g.vertex_count(), draw);
    best = std::max(best, matrix_rank(rigidity_matrix(g, p)));
    if (best == bound) break;
  }
  return best;
}

bool is_infinitesimally_rigid(const Graph& g, const Configuration& p) {
  const auto rank = matrix_rank(rigidity_matrix(g, p));
  const std::size_t n = g.vertex_count();
  return n >= 2 && rank == 2 * n - 3;
}

}  // namespace rigidity
