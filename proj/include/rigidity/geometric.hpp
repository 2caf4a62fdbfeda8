#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <vector>

#include "rigidity/graph.hpp"
#include "rigidity/simd/kernels.hpp"

namespace rigidity {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// n points in the square [0, side]^2 together with the seed that made them.
struct Deployment {
  double side = 1.0;
  std::uint64_t seed = 0;
  std::vector<Point2> points;

  std::size_t size() const noexcept { return points.size(); }

  friend bool operator==(const Deployment&, const Deployment&) = default;
};

/// Uniform i.i.d. placement.
///
/// Generator: std::mt19937_64 seeded with `seed`. For each point, x is drawn
/// before y; a draw maps the top 53 bits of one 64-bit output to
/// [0, 1) as (w >> 11) * 2^-53 and scales by `side`. The result is therefore
/// bit-reproducible on every conforming platform.
///
/// Throws Error(kInvalidSide) unless side is finite and > 0.
Deployment sample_deployment(std::size_t n, double side, std::uint64_t seed);

/// Graph with edge (i, j) iff |p_i - p_j|^2 <= radius^2 (closed disk).
/// Throws Error(kInvalidSide) if radius is negative or NaN.
Graph geometric_graph(const Deployment& dep, double radius);

/// Same graph built with an explicit kernel variant.
Graph geometric_graph(const Deployment& dep, double radius, const simd::KernelTable& kernels);

// Deployment file: header "n side seed", then n lines "x y" printed with 17
// significant digits so a reload reproduces the doubles exactly.
void write_deployment(std::ostream& out, const Deployment& dep);
Deployment read_deployment(std::istream& in);
Deployment read_deployment_file(const std::filesystem::path& path);

}  // namespace rigidity
