#include "lowlying/toolbox.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/zeta.hpp>

#include "lowlying/arith.hpp"
#include "lowlying/deltasym.hpp"

namespace lowlying {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

double ramp(double s) {
  if (s <= 0.0) return 0.0;
  if (s >= 1.0) return 1.0;
  const double f = std::exp(-1.0 / s);
  const double g = std::exp(-1.0 / (1.0 - s));
  return f / (f + g);
}

// J_kappa(y) for y < 1, where the series has no cancellation to speak of.
double small_bessel(int kappa, double y) {
  const double half = y / 2.0;
  double term = 1.0;
  for (int k = 1; k <= kappa; ++k) term *= half / k;
  double sum = term;
  for (int k = 1; k < 60; ++k) {
    term *= -half * half / (static_cast<double>(k) * (k + kappa));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

}  // namespace

double partition_psi(double x) { return ramp((x - 1.0) / (kSqrt2 - 1.0)); }

double partition_rho(double x) { return partition_psi(x) - partition_psi(x / kSqrt2); }

std::vector<ScaleWeight> smooth_partition(double x) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::invalid_argument("smooth_partition: x must be positive, got " + std::to_string(x));
  const int k0 = static_cast<int>(std::floor(2.0 * std::log2(x)));
  std::vector<ScaleWeight> out;
  for (int a = k0 - 3; a <= k0 + 1; ++a) {
    const double w = partition_rho(x / std::pow(2.0, 0.5 * a));
    if (w != 0.0) out.push_back({a, w});
  }
  return out;
}

double partition_check(std::span<const double> grid) {
  double worst = 0.0;
  for (double x : grid) {
    double total = 0.0;
    for (const auto& sw : smooth_partition(x)) total += sw.weight;
    worst = std::max(worst, std::abs(total - 1.0));
  }
  return worst;
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (!(lo > 0.0) || !(hi > lo) || points < 2)
    throw std::invalid_argument("log_grid: need 0 < lo < hi and at least two points");
  std::vector<double> out(static_cast<std::size_t>(points));
  const double a = std::log(lo);
  const double step = (std::log(hi) - a) / (points - 1);
  for (int i = 0; i < points; ++i) out[static_cast<std::size_t>(i)] = std::exp(a + step * i);
  return out;
}

DyadicSum dyadic_sum(double alpha, double bound, DyadicDirection direction) {
  if (!(alpha > 0.0)) throw std::invalid_argument("dyadic_sum: alpha must be positive");
  if (!(bound > 0.0)) throw std::invalid_argument("dyadic_sum: bound must be positive");
  constexpr double kSlack = 1e-12;
  const double denom = 1.0 - std::pow(2.0, -alpha / 2.0);
  DyadicSum out;
  if (direction == DyadicDirection::UpTo) {
    if (bound < 1.0 - kSlack) {
      out.bound = std::pow(bound, alpha) / denom;
      out.holds = true;
      return out;
    }
    for (int k = 0;; ++k) {
      const double M = std::pow(2.0, 0.5 * k);
      if (M > bound * (1.0 + kSlack)) break;
      out.value += std::pow(M, alpha);
      ++out.terms;
    }
    out.bound = std::pow(bound, alpha) / denom;
  } else {
    int k = static_cast<int>(std::ceil(2.0 * std::log2(bound) - kSlack));
    const double first = std::pow(std::pow(2.0, 0.5 * k), -alpha);
    for (double term = first; term > 1e-18 * first; ++k, term = std::pow(std::pow(2.0, 0.5 * k), -alpha)) {
      out.value += term;
      ++out.terms;
    }
    out.bound = std::pow(bound, -alpha) / denom;
  }
  out.holds = out.value <= out.bound * (1.0 + kSlack);
  return out;
}

PicardRecord picard_monitor(double X, int kappa) {
  if (!(X > 0.0) || X > 1e4) throw std::invalid_argument("picard_monitor: X must lie in (0, 1e4]");
  if (kappa < 1) throw std::invalid_argument("picard_monitor: kappa must be >= 1");

  PicardRecord rec;
  rec.X = X;
  rec.kappa = kappa;
  rec.D = static_cast<long>(std::max(1000.0, std::ceil(1000.0 * X)));
  const auto D = static_cast<std::uint64_t>(rec.D);
  const auto tau = arith::divisor_count_table(D);

  // Both the direct terms and the partial zeta-square sums, smallest first.
  const long double s = kappa + 0.5L;
  long double direct = 0.0L, direct_c = 0.0L;
  long double partial = 0.0L, partial_c = 0.0L;
  double bessel_error = 0.0;
  const auto kahan = [](long double& sum, long double& c, long double v) {
    const long double y = v - c;
    const long double t = sum + y;
    c = (t - sum) - y;
    sum = t;
  };
  for (std::uint64_t d = D; d >= 1; --d) {
    const double y = X / static_cast<double>(d);
    const double j = y < 1.0 ? small_bessel(kappa, y) : bessel_j(kappa, y);
    const long double sd = std::sqrt(static_cast<long double>(d));
    bessel_error += tau[d] / static_cast<double>(sd) * (y < 1.0 ? 1e-15 * std::abs(j) : 1e-10);
    kahan(direct, direct_c, tau[d] / sd * std::abs(j));
    kahan(partial, partial_c, tau[d] * std::pow(static_cast<long double>(d), -s));
  }

  // d > D: |J_kappa(y)| = (y/2)^kappa / kappa! (1 - theta (y/2)^2 / (kappa+1)), 0 <= theta <= 1.
  const long double lead = std::pow(static_cast<long double>(X) / 2.0L, kappa) / std::tgamma(kappa + 1.0L);
  const long double zeta = boost::math::zeta(s);
  const long double tail_sum = zeta * zeta - partial;
  const long double tail = lead * tail_sum;
  const double rounding = static_cast<double>(lead * zeta * zeta) * 64.0 * std::numeric_limits<long double>::epsilon();
  const double rel = std::pow(X / (2.0 * rec.D), 2) / (kappa + 1.0);
  rec.lhs = static_cast<double>(direct + tail);
  rec.error_bound = static_cast<double>(tail) * rel + rounding + bessel_error;
  rec.rhs_shape = X > 1.0 ? std::sqrt(X) * std::log(X) : std::pow(X, kappa);
  rec.ratio = rec.lhs / rec.rhs_shape;
  return rec;
}

}  // namespace lowlying
