#include "rigidity/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "parallel.hpp"
#include "rigidity/error.hpp"
#include "rigidity/indices.hpp"
#include "rigidity/report_io.hpp"

namespace rigidity {

namespace {

mpq_class to_mpq(RatioValue v) {
  mpq_class q(static_cast<long>(v.numerator()), static_cast<unsigned long>(v.denominator()));
  q.canonicalize();
  return q;
}

// Population standard deviation from exact first and second moments.
double population_std(const mpq_class& sum, const mpq_class& sum_sq, int trials) {
  const mpq_class mean = sum / trials;
  const mpq_class var = sum_sq / trials - mean * mean;
  return std::sqrt(std::max(0.0, var.get_d()));
}

const std::vector<mpq_class>& values_of(const SweepCurve& curve, IndexKind which) {
  return which == IndexKind::kRigidity ? curve.k_r : curve.k_u;
}

}  // namespace

std::vector<double> ratio_grid(double step) {
  if (!(step > 0.0) || step > 1.0) {
    throw Error(Errc::kBadGrid, "grid step must lie in (0, 1]");
  }
  const auto count = static_cast<std::size_t>(std::floor(1.0 / step + 1e-9)) + 1;
  std::vector<double> ratios(count);
  for (std::size_t i = 0; i < count; ++i) {
    // Snap to 12 decimals so 57 * 0.01 prints and compares as 0.57.
    ratios[i] = std::min(1.0, std::round(static_cast<double>(i) * step * 1e12) / 1e12);
  }
  return ratios;
}

void validate_grid(std::span<const double> ratios) {
  if (ratios.empty()) throw Error(Errc::kBadGrid, "ratio grid is empty");
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    if (!(ratios[i] >= 0.0 && ratios[i] <= 1.0)) {
      throw Error(Errc::kBadGrid, "ratio " + std::to_string(ratios[i]) + " outside [0, 1]");
    }
    if (i > 0 && !(ratios[i] > ratios[i - 1])) {
      throw Error(Errc::kBadGrid, "ratios must be strictly increasing");
    }
  }
}

SweepCurve sweep_single(const Deployment& dep, std::span<const double> ratios) {
  validate_grid(ratios);
  SweepCurve curve;
  curve.ratios.assign(ratios.begin(), ratios.end());
  curve.k_r.resize(ratios.size());
  curve.k_u.resize(ratios.size());
  curve.k_r_std.assign(ratios.size(), 0.0);
  curve.k_u_std.assign(ratios.size(), 0.0);
  curve.trials = 1;
  curve.n = dep.size();
  curve.side = dep.side;
  curve.base_seed = dep.seed;
  detail::parallel_for(ratios.size(), [&](std::size_t i) {
    const Graph g = geometric_graph(dep, ratios[i] * dep.side);
    const auto indices = rigidity_and_redundancy(g);
    curve.k_r[i] = to_mpq(indices.k_r);
    curve.k_u[i] = to_mpq(indices.k_u);
  });
  return curve;
}

SweepCurve sweep_average(std::size_t n, double side, int trials,
                         std::span<const double> ratios, std::uint64_t base_seed) {
  validate_grid(ratios);
  if (trials < 1) throw Error(Errc::kBadGrid, "trial count must be >= 1");
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw Error(Errc::kInvalidSide, "side length must be positive and finite");
  }

  std::vector<SweepCurve> per_trial(static_cast<std::size_t>(trials));
  detail::parallel_for(per_trial.size(), [&](std::size_t t) {
    per_trial[t] = sweep_single(sample_deployment(n, side, base_seed + t), ratios);
  });

  SweepCurve curve;
  curve.ratios.assign(ratios.begin(), ratios.end());
  curve.trials = trials;
  curve.n = n;
  curve.side = side;
  curve.base_seed = base_seed;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    mpq_class kr_sum = 0, kr_sq = 0, ku_sum = 0, ku_sq = 0;
    for (const auto& trial : per_trial) {
      kr_sum += trial.k_r[i];
      kr_sq += trial.k_r[i] * trial.k_r[i];
      ku_sum += trial.k_u[i];
      ku_sq += trial.k_u[i] * trial.k_u[i];
    }
    curve.k_r.push_back(kr_sum / trials);
    curve.k_u.push_back(ku_sum / trials);
    curve.k_r_std.push_back(population_std(kr_sum, kr_sq, trials));
    curve.k_u_std.push_back(population_std(ku_sum, ku_sq, trials));
  }
  return curve;
}

std::optional<double> threshold_ratio(const SweepCurve& curve, IndexKind which) {
  const auto& values = values_of(curve, which);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] == 1) return curve.ratios[i];
  }
  return std::nullopt;
}

std::optional<double> relative_increase(const SweepCurve& curve) {
  const auto rigid = threshold_ratio(curve, IndexKind::kRigidity);
  const auto redundant = threshold_ratio(curve, IndexKind::kRedundancy);
  if (!rigid || !redundant || *rigid == 0.0) return std::nullopt;
  return (*redundant - *rigid) / *rigid;
}

void write_sweep_csv(std::ostream& out, const SweepCurve& curve, bool exact) {
  out << "ratio,k_r_mean,k_r_std,k_u_mean,k_u_std,trials";
  if (exact) out << ",k_r_exact,k_u_exact";
  out << '\n';
  for (std::size_t i = 0; i < curve.size(); ++i) {
    out << format_decimal(curve.ratios[i]) << ',' << format_decimal(curve.k_r[i].get_d()) << ','
        << format_decimal(curve.k_r_std[i]) << ',' << format_decimal(curve.k_u[i].get_d())
        << ',' << format_decimal(curve.k_u_std[i]) << ',' << curve.trials;
    if (exact) {
      out << ',' << curve.k_r[i].get_num() << '/' << curve.k_r[i].get_den() << ','
          << curve.k_u[i].get_num() << '/' << curve.k_u[i].get_den();
    }
    out << '\n';
  }
}

void write_sweep_svg(std::ostream& out, const SweepCurve& curve) {
  constexpr double kWidth = 640, kHeight = 400, kLeft = 60, kRight = 20, kTop = 20,
                   kBottom = 50;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;
  auto px = [&](double ratio) { return kLeft + ratio * plot_w; };
  auto py = [&](double value) { return kTop + (1.0 - value) * plot_h; };
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  auto polyline = [&](const std::vector<mpq_class>& values, const char* style) {
    out << "<polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t i = 0; i < curve.size(); ++i) {
      out << (i ? " " : "") << fmt(px(curve.ratios[i])) << ',' << fmt(py(values[i].get_d()));
    }
    out << "\"/>\n";
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<g stroke=\"black\" stroke-width=\"1\">\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w
      << "\" y2=\"" << kTop + plot_h << "\"/>\n"
      << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
      << kTop + plot_h << "\"/>\n"
      << "</g>\n"
      << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
  for (int t = 0; t <= 10; t += 2) {
    const double v = t / 10.0;
    out << "<text x=\"" << fmt(px(v)) << "\" y=\"" << fmt(kTop + plot_h + 15)
        << "\" text-anchor=\"middle\">" << fmt(v) << "</text>\n"
        << "<text x=\"" << fmt(kLeft - 6) << "\" y=\"" << fmt(py(v) + 4)
        << "\" text-anchor=\"end\">" << fmt(v) << "</text>\n";
  }
  out << "<text x=\"" << fmt(kLeft + plot_w / 2) << "\" y=\"" << fmt(kHeight - 10)
      << "\" text-anchor=\"middle\">r_s / d</text>\n"
      << "<text x=\"" << fmt(kLeft + 10) << "\" y=\"" << fmt(kTop + 12)
      << "\" fill=\"blue\">K_r</text>\n"
      << "<text x=\"" << fmt(kLeft + 50) << "\" y=\"" << fmt(kTop + 12)
      << "\" fill=\"red\">K_u</text>\n"
      << "</g>\n";
  polyline(curve.k_r, "stroke=\"blue\" stroke-width=\"1.5\"");
  polyline(curve.k_u, "stroke=\"red\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\"");
  out << "</svg>\n";
}

}  // namespace rigidity
