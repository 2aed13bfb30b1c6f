#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lowlying/deltasym.hpp"

namespace lowlying {

namespace {

void check_domain(int order, double x) {
  if (order < 0) throw std::invalid_argument("bessel_j: negative order " + std::to_string(order));
  if (!(x >= 0.0) || x > 1e6)
    throw std::invalid_argument("bessel_j: argument outside [0, 1e6]: " + std::to_string(x));
}

}  // namespace

double bessel_j_series(int order, double x) {
  check_domain(order, x);
  if (x == 0.0) return order == 0 ? 1.0 : 0.0;
  // Terms grow to about e^x before decaying; quad precision keeps the
  // cancellation harmless for x up to a few dozen past the order.
  using Quad = __float128;
  const Quad half = static_cast<Quad>(x) / 2;
  const Quad h2 = half * half;
  Quad term = 1;
  for (int k = 1; k <= order; ++k) term *= half / k;
  Quad sum = term;
  Quad largest = term < 0 ? -term : term;
  for (int k = 1; k < 100000; ++k) {
    term *= -h2 / (static_cast<Quad>(k) * (k + order));
    sum += term;
    const Quad a = term < 0 ? -term : term;
    if (a > largest) largest = a;
    if (k > half && a < largest * static_cast<Quad>(1e-34)) break;
  }
  return static_cast<double>(sum);
}

double bessel_j_integral(int order, double x) {
  check_domain(order, x);
  const int nodes = order + static_cast<int>(std::ceil(x + 10.0 * std::cbrt(x) + 40.0));
  const double h = 2.0 * std::numbers::pi / nodes;
  double sum = 0.0;
  for (int j = 0; j < nodes; ++j) {
    const double t = j * h;
    sum += std::cos(order * t - x * std::sin(t));
  }
  return sum / nodes;
}

double bessel_j(int order, double x) {
  check_domain(order, x);
  if (x <= order + 20.0) return bessel_j_series(order, x);
  return bessel_j_integral(order, x);
}

}  // namespace lowlying
