#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "rigidity/geometric.hpp"

namespace rigidity {

/// K_r and K_u sampled along a grid of sensing-radius ratios r_s / side.
/// With trials > 1 the values are exact per-ratio means across deployments.
struct SweepCurve {
  std::vector<double> ratios;
  std::vector<mpq_class> k_r;
  std::vector<mpq_class> k_u;
  // Population standard deviation across trials (0 for a single trial).
  std::vector<double> k_r_std;
  std::vector<double> k_u_std;
  int trials = 1;
  std::size_t n = 0;
  double side = 1.0;
  std::uint64_t base_seed = 0;

  std::size_t size() const noexcept { return ratios.size(); }

  friend bool operator==(const SweepCurve&, const SweepCurve&) = default;
};

enum class IndexKind { kRigidity, kRedundancy };

/// 0, step, 2*step, ... up to 1: floor(1/step) + 1 points.
/// Throws Error(kBadGrid) unless 0 < step <= 1.
std::vector<double> ratio_grid(double step);

/// Throws Error(kBadGrid) if ratios are empty, not strictly increasing, or
/// outside [0, 1].
void validate_grid(std::span<const double> ratios);

SweepCurve sweep_single(const Deployment& dep, std::span<const double> ratios);

/// Trial t in [0, trials) uses the deployment sample_deployment(n, side,
/// base_seed + t). Trials run concurrently; the reduction is keyed on trial
/// index, so the result does not depend on scheduling.
SweepCurve sweep_average(std::size_t n, double side, int trials,
                         std::span<const double> ratios, std::uint64_t base_seed);

/// Smallest grid ratio whose mean index equals exactly 1.
std::optional<double> threshold_ratio(const SweepCurve& curve, IndexKind which);

/// (redundancy threshold - rigidity threshold) / rigidity threshold.
std::optional<double> relative_increase(const SweepCurve& curve);

/// Header "ratio,k_r_mean,k_r_std,k_u_mean,k_u_std,trials", one row per grid
/// point, decimals to 6 places. With `exact`, two extra columns k_r_exact and
/// k_u_exact carry the means as "p/q".
void write_sweep_csv(std::ostream& out, const SweepCurve& curve, bool exact = false);

/// Minimal standalone SVG with both curves against r_s / side.
void write_sweep_svg(std::ostream& out, const SweepCurve& curve);

}  // namespace rigidity
