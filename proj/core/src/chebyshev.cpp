#include "lowlying/chebyshev.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>

#include "lowlying/arith.hpp"

namespace lowlying::chebyshev {

double chebyshev_eval(int r, double x) {
  if (r < 0) throw std::invalid_argument("chebyshev_eval: negative degree");
  if (r == 0) return 1.0;
  double prev = 1.0;
  double cur = x;
  for (int k = 1; k < r; ++k) {
    const double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hecke_extend(const HeckeSystem& sys, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("hecke_extend: n must be positive");
  double value = 1.0;
  for (const auto& [p, e] : arith::factorize(n).factors) {
    if (p == sys.level) {
      if (!sys.level_value)
        throw std::out_of_range("hecke_extend: no eigenvalue supplied at level prime " +
                                std::to_string(p));
      value *= std::pow(*sys.level_value, e);
      continue;
    }
    const auto it = sys.prime_values.find(p);
    if (it == sys.prime_values.end())
      throw std::out_of_range("hecke_extend: no eigenvalue for prime " + std::to_string(p));
    value *= chebyshev_eval(e, it->second);
  }
  return value;
}

const BigInt& LinearizationTable::at(int j) const {
  static const BigInt zero{0};
  if (j < 0 || j >= static_cast<int>(coeffs.size())) return zero;
  return coeffs[static_cast<std::size_t>(j)];
}

LinearizationTable linearization_table(int varpi, int r) {
  if (varpi < 0 || r < 0) throw std::invalid_argument("linearization_table: negative argument");
  if (static_cast<long long>(varpi) * r > kMaxLinearizationDegree)
    throw std::invalid_argument("linearization_table: r*varpi = " +
                                std::to_string(static_cast<long long>(varpi) * r) +
                                " exceeds " + std::to_string(kMaxLinearizationDegree));
  // Start from X_0 = 1 and multiply by X_r varpi times using
  // X_a X_b = sum_{k=0}^{min(a,b)} X_{a+b-2k}.
  std::vector<BigInt> cur{BigInt{1}};
  for (int step = 0; step < varpi; ++step) {
    std::vector<BigInt> next(cur.size() + static_cast<std::size_t>(r));
    for (std::size_t a = 0; a < cur.size(); ++a) {
      if (cur[a].is_zero()) continue;
      const int ai = static_cast<int>(a);
      const int kmax = std::min(ai, r);
      for (int k = 0; k <= kmax; ++k) next[static_cast<std::size_t>(ai + r - 2 * k)] += cur[a];
    }
    cur = std::move(next);
  }
  return {varpi, r, std::move(cur)};
}

double linearization_quadrature(int varpi, int r, int j) {
  if (varpi < 1) throw std::invalid_argument("linearization_quadrature: varpi must be >= 1");
  using Rule = boost::math::quadrature::gauss<double, 64>;
  auto integrand = [&](double t) {
    const double x = 2.0 * std::cos(t);
    const double s = std::sin(t);
    return std::pow(chebyshev_eval(r, x), varpi) * chebyshev_eval(j, x) * s * s;
  };
  constexpr int kPanels = 8;
  const double width = std::numbers::pi / kPanels;
  double total = 0.0;
  for (int k = 0; k < kPanels; ++k) total += Rule::integrate(integrand, k * width, (k + 1) * width);
  return 2.0 / std::numbers::pi * total;
}

}  // namespace lowlying::chebyshev
