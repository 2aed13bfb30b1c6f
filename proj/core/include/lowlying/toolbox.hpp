#pragma once

#include <span>
#include <vector>

namespace lowlying {

/// Smooth dyadic partition of unity on powers of sqrt(2).
///
/// psi rises from 0 at x = 1 to 1 at x = sqrt(2) along the ramp
/// h(s) = f(s) / (f(s) + f(1 - s)), f(s) = exp(-1/s); rho(x) = psi(x) - psi(x / sqrt(2))
/// is supported in [1, 2] and sum_a rho(x / sqrt(2)^a) = 1 for every x > 0.
double partition_psi(double x);
double partition_rho(double x);

struct ScaleWeight {
  int a = 0;
  double weight = 0.0;  // rho(x / sqrt(2)^a)
};

// Nonzero weights rho(x / sqrt(2)^a). Throws std::invalid_argument for x <= 0.
std::vector<ScaleWeight> smooth_partition(double x);

// max over the grid of |sum_a rho(x / sqrt(2)^a) - 1|
double partition_check(std::span<const double> grid);

// `points` values spaced evenly in log between lo and hi.
std::vector<double> log_grid(double lo, double hi, int points);

enum class DyadicDirection { UpTo, From };

struct DyadicSum {
  double value = 0.0;
  double bound = 0.0;  // bound^{+-alpha} / (1 - 2^{-alpha/2})
  bool holds = false;
  int terms = 0;
};

/// UpTo: sum of M^alpha over M = sqrt(2)^k, k >= 0, M <= bound.
/// From: sum of M^{-alpha} over M = sqrt(2)^k >= bound.
/// Throws std::invalid_argument unless alpha > 0 and bound > 0.
DyadicSum dyadic_sum(double alpha, double bound, DyadicDirection direction);

struct PicardRecord {
  double X = 0.0;
  int kappa = 0;
  double lhs = 0.0;
  double rhs_shape = 0.0;  // X^{1/2} log X for X > 1, X^kappa otherwise
  double ratio = 0.0;
  long D = 0;              // divisor range summed term by term
  double error_bound = 0.0;
};

/// lhs = sum_{d >= 1} tau(d) / sqrt(d) |J_kappa(X / d)|. Terms d <= D are
/// summed directly; beyond D the leading term (X/2d)^kappa / kappa! of the
/// Bessel series is summed in closed form through zeta(kappa + 1/2)^2, and the
/// rest is bounded and reported in error_bound. Requires 0 < X <= 1e4, kappa >= 1.
PicardRecord picard_monitor(double X, int kappa);

}  // namespace lowlying
