#pragma once

#include <algorithm>

#include <boost/math/quadrature/gauss.hpp>

namespace lowlying {

// Composite Gauss-Legendre with `Points` nodes on each of `panels` equal panels.
template <unsigned Points = 20, typename F>
double integrate_panels(F&& f, double a, double b, int panels) {
  using Rule = boost::math::quadrature::gauss<double, Points>;
  panels = std::max(panels, 1);
  const double width = (b - a) / panels;
  double total = 0.0;
  for (int k = 0; k < panels; ++k) {
    const double lo = a + k * width;
    total += Rule::integrate(f, lo, k + 1 == panels ? b : lo + width);
  }
  return total;
}

}  // namespace lowlying
