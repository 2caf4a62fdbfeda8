#include "rigidity/geometric.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>

#include "rigidity/error.hpp"
#include "rigidity/simd/kernels.hpp"

namespace rigidity {

namespace {

double unit_draw(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void check_side(double side) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw Error(Errc::kInvalidSide, "side length must be positive and finite");
  }
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

Deployment sample_deployment(std::size_t n, double side, std::uint64_t seed) {
  check_side(side);
  std::mt19937_64 rng(seed);
  Deployment dep;
  dep.side = side;
  dep.seed = seed;
  dep.points.resize(n);
  for (auto& p : dep.points) {
    p.x = unit_draw(rng) * side;
    p.y = unit_draw(rng) * side;
  }
  return dep;
}

Graph geometric_graph(const Deployment& dep, double radius) {
  return geometric_graph(dep, radius, simd::active_kernels());
}

Graph geometric_graph(const Deployment& dep, double radius, const simd::KernelTable& kernels) {
  if (!(radius >= 0.0)) {
    throw Error(Errc::kInvalidSide, "sensing radius must be >= 0");
  }
  const std::size_t n = dep.size();
  std::vector<double> xs(n);
  std::vector<double> ys(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = dep.points[i].x;
    ys[i] = dep.points[i].y;
  }
  const double limit = radius * radius;
  std::vector<std::uint8_t> mask(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t rest = n - i - 1;
    const std::size_t hits =
        kernels.within_limit(xs[i], ys[i], xs.data() + i + 1, ys.data() + i + 1, rest, limit,
                             mask.data());
    if (hits == 0) continue;
    for (std::size_t j = 0; j < rest; ++j) {
      if (mask[j]) {
        edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(i + 1 + j)});
      }
    }
  }
  return Graph(n, std::move(edges));
}

void write_deployment(std::ostream& out, const Deployment& dep) {
  out << dep.size() << ' ' << format_double(dep.side) << ' ' << dep.seed << '\n';
  for (const auto& p : dep.points) {
    out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
  }
}

Deployment read_deployment(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  };

  if (!next_line()) throw ParseError(line_no + 1, "missing 'n side seed' header");
  Deployment dep;
  long long n = -1;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> n >> dep.side >> dep.seed) || (header >> extra) || n < 0) {
      throw ParseError(line_no, "expected 'n side seed'");
    }
  }
  if (!(dep.side > 0.0) || !std::isfinite(dep.side)) {
    throw ParseError(line_no, "side length must be positive and finite");
  }
  dep.points.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) {
    if (!next_line()) {
      throw ParseError(line_no + 1, "expected " + std::to_string(n) + " points, found " +
                                        std::to_string(i));
    }
    std::istringstream row(line);
    Point2 p;
    std::string extra;
    if (!(row >> p.x >> p.y) || (row >> extra)) throw ParseError(line_no, "expected 'x y'");
    if (p.x < 0.0 || p.y < 0.0 || p.x > dep.side || p.y > dep.side) {
      throw ParseError(line_no, "point outside [0, side]^2");
    }
    dep.points.push_back(p);
  }
  if (next_line()) throw ParseError(line_no, "trailing data after the last point");
  return dep;
}

Deployment read_deployment_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return read_deployment(in);
}

}  // namespace rigidity
