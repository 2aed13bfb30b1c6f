#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cli.hpp"
#include "lowlying/arith.hpp"
#include "lowlying/chebyshev.hpp"
#include "lowlying/deltasym.hpp"
#include "lowlying/kernels.hpp"
#include "lowlying/partitions.hpp"
#include "lowlying/rmt.hpp"
#include "lowlying/testfn.hpp"
#include "lowlying/toolbox.hpp"

namespace lowlying::cli {

namespace {

// Result whose value must stay within tol of `expected`.
Result near(std::string name, double value, double expected, double tol) {
  Result r;
  r.name = std::move(name);
  r.value = value;
  r.predicted = expected;
  r.tolerance = tol;
  r.pass = std::abs(value - expected) <= tol;
  return r;
}

// Result for a property that either holds or not; value is the worst deviation.
Result holds(std::string name, double deviation, double tol) {
  return near(std::move(name), deviation, 0.0, tol);
}

Result flag(std::string name, bool ok) {
  Result r;
  r.name = std::move(name);
  r.value = ok ? 1.0 : 0.0;
  r.predicted = 1.0;
  r.pass = ok;
  return r;
}

std::vector<Result> arith_suite(std::uint64_t seed) {
  std::vector<Result> out;
  std::mt19937_64 rng(seed);

  double worst = 0.0;
  int pairs = 0;
  std::uniform_int_distribution<std::uint64_t> modulus(2, 300);
  std::uniform_int_distribution<std::int64_t> coeff(-1000, 1000);
  while (pairs < 100) {
    const std::uint64_t q = modulus(rng), r = modulus(rng);
    if (std::gcd(q, r) != 1) continue;
    const std::int64_t m = coeff(rng), n = coeff(rng);
    worst = std::max(worst, std::abs(arith::kloosterman(m, n, q * r) - arith::kloosterman_crt(m, n, q, r)));
    ++pairs;
  }
  out.push_back(holds("kloosterman CRT twisted multiplicativity, 100 coprime pairs", worst, 1e-8));

  worst = 0.0;
  for (std::uint64_t p : {2, 3, 5, 7, 13}) {
    for (int gamma = 0; gamma <= 3; ++gamma) {
      for (std::uint64_t q : {3, 5, 7, 11}) {
        if (p == q) continue;
        for (std::uint64_t r = 1; r <= 40; ++r) {
          worst = std::max(worst, std::abs(arith::kloosterman_special(p, gamma, q, r) -
                                           arith::kloosterman_special_closed_form(p, gamma, q, r)));
        }
      }
    }
  }
  out.push_back(holds("S(p^g q, 1; q r) against its closed form", worst, 1e-8));

  double ratio = 0.0;
  const std::int64_t mn[][2] = {{1, 1}, {2, 3}, {6, 10}, {-5, 7}, {12, 18}};
  for (std::uint64_t c = 1; c <= 2000; ++c) {
    for (const auto& [m, n] : mn)
      ratio = std::max(ratio, std::abs(arith::kloosterman(m, n, c)) / arith::weil_bound(m, n, c));
  }
  Result weil;
  weil.name = "Weil bound |S(m,n;c)| <= (m,n,c)^1/2 d(c) c^1/2, c <= 2000";
  weil.value = ratio;
  weil.predicted = 1.0;
  weil.tolerance = 1e-9;
  weil.pass = ratio <= 1.0 + 1e-9;
  out.push_back(weil);

  double imag = 0.0;
  for (std::uint64_t c = 1; c <= 300; c += 7) imag = std::max(imag, std::abs(arith::kloosterman_complex(3, -8, c).imag()));
  out.push_back(holds("Kloosterman sums are real", imag, 1e-9));
  return out;
}

std::vector<Result> chebyshev_suite() {
  std::vector<Result> out;
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i)
    for (int j = 0; j <= 10; ++j)
      worst = std::max(worst, std::abs(chebyshev::linearization_quadrature(1, i, j) - (i == j ? 1.0 : 0.0)));
  out.push_back(holds("orthonormality of X_0..X_10 under the Sato-Tate measure", worst, 1e-10));

  worst = 0.0;
  bool parity = true;
  for (int varpi = 1; varpi <= 6; ++varpi) {
    for (int r = 0; r <= 6; ++r) {
      const auto table = chebyshev::linearization_table(varpi, r);
      for (int j = 0; j <= r * varpi; ++j) {
        const double exact = table.at(j).convert_to<double>();
        worst = std::max(worst, std::abs(exact - chebyshev::linearization_quadrature(varpi, r, j)));
        if ((j - r * varpi) % 2 != 0 && table.at(j) != 0) parity = false;
      }
    }
  }
  out.push_back(holds("linearization coefficients, exact vs quadrature (varpi, r <= 6)", worst, 1e-8));
  out.push_back(flag("linearization coefficients vanish off the parity of r varpi", parity));

  bool square = true, first = true;
  for (int r = 1; r <= 12; ++r) {
    square = square && chebyshev::linearization_table(2, r).at(0) == 1;
    first = first && chebyshev::linearization_table(1, r).at(0) == 0;
  }
  out.push_back(flag("x(2, r, 0) = 1 for r = 1..12", square));
  out.push_back(flag("x(1, r, 0) = 0 for r = 1..12", first));
  return out;
}

std::vector<Result> partitions_suite(std::uint64_t seed) {
  std::vector<Result> out;
  // Stirling numbers of the second kind from S(n,k) = k S(n-1,k) + S(n-1,k-1).
  std::vector<std::vector<std::uint64_t>> stirling(11, std::vector<std::uint64_t>(11, 0));
  stirling[0][0] = 1;
  for (int n = 1; n <= 10; ++n)
    for (int k = 1; k <= n; ++k) stirling[n][k] = k * stirling[n - 1][k] + stirling[n - 1][k - 1];
  bool counts = true;
  for (int alpha = 1; alpha <= 10; ++alpha)
    for (int s = 1; s <= alpha; ++s)
      counts = counts && partitions::enumerate_rg(alpha, s).size() == stirling[alpha][s];
  out.push_back(flag("#P(alpha, s) equals the Stirling number, alpha <= 10", counts));

  const std::uint64_t pairings[] = {1, 3, 15, 105};
  for (int i = 0; i < 4; ++i) {
    const int alpha = 2 * (i + 1);
    const auto p2 = partitions::filter_profile(partitions::enumerate_rg(alpha, alpha / 2), partitions::exactly_two);
    out.push_back(near("#P2(" + std::to_string(alpha) + ", " + std::to_string(alpha / 2) + ")",
                       static_cast<double>(p2.size()), static_cast<double>(pairings[i]), 0.0));
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> xs(6);
  for (double& x : xs) x = u(rng);
  const partitions::MultiFunction g = [](std::span<const double> y) {
    double prod = 1.0, sum = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
      prod *= std::cos(y[i] + 0.3 * static_cast<double>(i));
      sum += y[i] * y[i] * static_cast<double>(i + 1);
    }
    return prod + std::exp(-sum);
  };
  double worst = 0.0;
  for (int m = 1; m <= 4; ++m) {
    const auto sides = partitions::reorder_check(m, g, xs);
    worst = std::max(worst, std::abs(sides.lhs - sides.rhs));
  }
  out.push_back(holds("reordering identity over set partitions, m <= 4", worst, 1e-9));
  return out;
}

std::vector<Result> testfn_suite() {
  std::vector<Result> out;
  std::vector<double> grid;
  for (double x = -20.0; x <= 20.0; x += 0.37) grid.push_back(x);
  double worst = 0.0, product = 0.0;
  for (double nu : {0.5, 0.9, 1.5}) {
    for (auto fam : {Family::Fejer, Family::CosineSquared}) {
      const TestFunction tf(fam, nu);
      worst = std::max(worst, fourier_pair_check(tf, grid));
      product = std::max(product, std::abs(pair_integrals(tf, tf).prodhat0 - direct_product_integral(tf, tf)));
    }
  }
  out.push_back(holds("phi against numerical inversion of its transform", worst, 1e-9));
  out.push_back(holds("int phi^2 on both sides of Plancherel", product, 1e-6));
  return out;
}

std::vector<Result> kernels_suite() {
  std::vector<Result> out;
  double worst = 0.0;
  for (double nu : {0.5, 0.9, 1.5}) {
    for (auto fam : {Family::Fejer, Family::CosineSquared}) {
      const TestFunction tf(fam, nu);
      for (auto cls : {SymmetryClass::SOeven, SymmetryClass::O, SymmetryClass::SOodd, SymmetryClass::Sp}) {
        const auto p = plancherel_integral(cls, tf);
        worst = std::max(worst, std::abs(p.direct - p.fourier));
      }
    }
  }
  out.push_back(holds("int phi W1 agrees on both sides of Plancherel", worst, 1e-6));

  // Each cell is compared with i^{((r+1)/2)^2 (kappa-1) + (r+1)/2}.
  bool table = true;
  for (int kappa : {12, 14}) {
    for (int r : {1, 3, 5, 7, 9, 11, 13, 15}) {
      const long h = (r + 1) / 2;
      const long e = ((h * h * (kappa - 1) + h) % 4 + 4) % 4;
      if (e % 2 != 0) {
        table = false;
        continue;
      }
      const int expected = e == 0 ? 1 : -1;
      for (int eps : {1, -1}) table = table && sign_functional_equation({kappa, r, eps}) == eps * expected;
    }
    for (int r : {2, 4, 6}) table = table && sign_functional_equation({kappa, r, -1}) == 1;
  }
  out.push_back(flag("root number table over kappa mod 4 and r mod 8", table));

  bool above_one = true, floor = true;
  for (int kappa = 2; kappa <= 24; kappa += 2) {
    above_one = above_one && support_bounds({1, kappa, 7.0 / 64.0}).nu1max > 1.0;
    for (int r = 1; r <= 6; ++r)
      floor = floor && support_bounds({r, kappa, 7.0 / 64.0}).nu1max >= 82.0 / (57.0 * r * r) - 1e-15;
  }
  out.push_back(flag("nu1max(1, kappa, 7/64) > 1 for kappa = 2..24", above_one));
  out.push_back(flag("nu1max(r, kappa, 7/64) >= 82/(57 r^2)", floor));

  const auto tf = TestFunction::fejer(0.5);
  const double v[] = {predicted_two_level(2, {}, tf, tf), predicted_two_level(1, {}, tf, tf),
                      predicted_two_level(1, 1, tf, tf), predicted_two_level(1, -1, tf, tf)};
  double gap = 1e9;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) gap = std::min(gap, std::abs(v[i] - v[j]));
  Result sep;
  sep.name = "two-level predictions pairwise distinct at Fejer(0.5), smallest gap";
  sep.value = gap;
  sep.tolerance = 0.1;
  sep.pass = gap > 0.1;
  out.push_back(sep);
  return out;
}

std::vector<Result> toolbox_suite() {
  std::vector<Result> out;
  out.push_back(holds("partition of unity on 200 log-spaced points in [1e-3, 1e3]",
                      partition_check(log_grid(1e-3, 1e3, 200)), 1e-12));
  bool support = true;
  for (double x : log_grid(0.1, 10.0, 500)) {
    const double rho = partition_rho(x);
    if ((x <= 1.0 || x >= 2.0) && rho != 0.0) support = false;
  }
  out.push_back(flag("rho vanishes outside [1, 2]", support));
  const auto up = dyadic_sum(2.0, 8.0, DyadicDirection::UpTo);
  out.push_back(near("sum of M^2 over sqrt(2)-powers up to 8", up.value, 127.0, 1e-9));
  out.push_back(flag("dyadic sums within their geometric bounds",
                     up.holds && dyadic_sum(1.0, 4.0, DyadicDirection::From).holds &&
                         dyadic_sum(0.5, 1000.0, DyadicDirection::UpTo).holds &&
                         dyadic_sum(3.0, 0.3, DyadicDirection::From).holds));
  return out;
}

std::vector<Result> rmt_suite(std::uint64_t seed) {
  std::vector<Result> out;
  const auto tf1 = TestFunction::fejer(0.5);
  const auto tf2 = TestFunction::cosine_squared(0.8);
  for (auto cls : {SymmetryClass::SOeven, SymmetryClass::SOodd, SymmetryClass::O, SymmetryClass::Sp}) {
    double identity = 0.0, structure = 0.0, det = 0.0;
    bool symmetric = true;
    for (std::uint64_t i = 0; i < 100; ++i) {
      Rng rng(sample_seed(seed, i));
      const HaarMatrix h = sample_matrix(cls, 100, rng);
      if (h.is_complex()) {
        const auto J = symplectic_form(static_cast<int>(h.dim() / 2));
        structure = std::max(structure, (h.complex.transpose() * J * h.complex - J).cwiseAbs().maxCoeff());
      } else {
        const auto I = Eigen::MatrixXd::Identity(h.dim(), h.dim());
        structure = std::max(structure, (h.real * h.real.transpose() - I).cwiseAbs().maxCoeff());
        det = std::max(det, std::abs(h.real.determinant() - 1.0));
      }
      const ZeroSample zs = eigenphases_to_zeros(h);
      const auto& z = zs.zeros;
      for (std::size_t k = 0; k < z.size(); ++k) symmetric = symmetric && z[k] == -z[z.size() - 1 - k];
      identity = std::max(identity, std::abs(two_level_stat(zs, tf1, tf2, TwoLevelMethod::Direct) -
                                             two_level_stat(zs, tf1, tf2, TwoLevelMethod::ViaIdentity)));
    }
    const std::string tag = to_string(cls);
    out.push_back(holds(tag + ": D2 direct vs D1 identity, 100 samples", identity, 1e-9));
    if (cls == SymmetryClass::Sp) {
      out.push_back(holds(tag + ": U^T J U = J", structure, 1e-8));
    } else {
      out.push_back(holds(tag + ": U U^T = I", structure, 1e-10));
      out.push_back(holds(tag + ": det U = 1", det, 1e-8));
    }
    out.push_back(flag(tag + ": zeros symmetric under negation", symmetric));
  }
  return out;
}

std::vector<Result> deltasym_suite(int workers) {
  std::vector<Result> out;
  const auto k10 = petersson_ratio_suite(10, 20, 1e-8, workers);
  out.push_back(holds("Delta_1(m,n) = 0 at weight 10, m,n <= 20", k10.max_deviation, 1e-6));
  const auto k12 = petersson_ratio_suite(12, 20, 1e-8, workers);
  out.push_back(holds("Delta_1(n,1)/Delta_1(1,1) = tau(n)/n^(11/2) and rank one, weight 12", k12.max_deviation, 1e-6));

  double worst = 0.0;
  for (int order = 0; order <= 15; ++order)
    for (double x = order + 10.0; x <= order + 30.0; x += 0.5)
      worst = std::max(worst, std::abs(bessel_j_series(order, x) - bessel_j_integral(order, x)));
  out.push_back(holds("J_n series vs integral on [n+10, n+30]", worst, 1e-9));

  const TauTable tau(30);
  out.push_back(flag("tau(6) = tau(2) tau(3)", tau.tau(6) == tau.tau(2) * tau.tau(3)));
  out.push_back(flag("tau(2)^2 - tau(4) = 2^11", tau.tau(2) * tau.tau(2) - tau.tau(4) == 2048));
  out.push_back(flag("tau(1) = 1, tau(2) = -24", tau.tau(1) == 1 && tau.tau(2) == -24));

  const DeltaParams big{1009, 10, 1e-8, workers};
  out.push_back(near("Delta_1009(5,5) at weight 10", delta_symbol(big, 5, 5), 1.0, 1e-8));

  DeltaParams a{1, 12, 1e-6, workers}, b{1, 12, 5e-7, workers};
  double drift = 0.0;
  for (std::uint64_t m = 1; m <= 6; ++m) drift = std::max(drift, std::abs(delta_symbol(a, m, 3) - delta_symbol(b, m, 3)));
  out.push_back(holds("halving tol moves Delta by less than the sum of both", drift, 1.5e-6));
  return out;
}

void append(std::vector<Result>& out, std::vector<Result> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

std::vector<Result> verify_suite(const std::string& suite, std::uint64_t seed, int workers) {
  std::vector<Result> out;
  const bool all = suite == "all";
  bool known = all;
  const auto want = [&](const char* name) {
    if (all || suite == name) {
      known = true;
      return true;
    }
    return false;
  };
  if (want("arith")) append(out, arith_suite(seed));
  if (want("chebyshev")) append(out, chebyshev_suite());
  if (want("partitions")) append(out, partitions_suite(seed));
  if (want("testfn")) append(out, testfn_suite());
  if (want("kernels")) append(out, kernels_suite());
  if (want("toolbox")) append(out, toolbox_suite());
  if (want("rmt")) append(out, rmt_suite(seed));
  if (want("deltasym")) append(out, deltasym_suite(workers));
  if (!known) throw std::invalid_argument("unknown suite '" + suite + "'");
  return out;
}

}  // namespace lowlying::cli
