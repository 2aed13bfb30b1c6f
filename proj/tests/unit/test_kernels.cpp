#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "lowlying/kernels.hpp"

using namespace lowlying;

namespace {

constexpr double kPi = std::numbers::pi;

// int hat(u) hatW1(u) du for a Fejer function of support nu, by hand.
double fejer_fourier_side(SymmetryClass cls, double nu) {
  const double a = std::min(nu, 1.0);
  const double inner = 2.0 * (a - a * a / (2.0 * nu));  // int_{-1}^{1} hat
  const double all = nu;                                 // int hat = phi(0)
  switch (cls) {
    case SymmetryClass::SOeven: return 1.0 + inner / 2.0;
    case SymmetryClass::O: return 1.0 + all / 2.0;
    case SymmetryClass::SOodd: return 1.0 - inner / 2.0 + all;
    case SymmetryClass::Sp: return 1.0 - inner / 2.0;
  }
  return 0.0;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("eta") {
  CHECK(eta(0.3) == 1.0);
  CHECK(eta(-1.0) == 0.5);
  CHECK(eta(1.0001) == 0.0);
}

TEST_CASE("kernel values") {
  CHECK(w1(SymmetryClass::SOeven, 0.0, Side::Direct).smooth == doctest::Approx(2.0));
  CHECK(w1(SymmetryClass::Sp, 0.0, Side::Direct).smooth == doctest::Approx(0.0).scale(1.0));
  CHECK(w1(SymmetryClass::SOeven, 0.5, Side::Direct).smooth == doctest::Approx(1.0));
  CHECK(w1(SymmetryClass::SOodd, 0.25, Side::Direct).smooth == doctest::Approx(1.0 - 1.0 / (kPi / 2.0)));
  CHECK(w1(SymmetryClass::SOodd, 0.25, Side::Direct).delta_coefficient == 1.0);
  CHECK(w1(SymmetryClass::O, 3.0, Side::Direct).smooth == 1.0);
  CHECK(w1(SymmetryClass::O, 3.0, Side::Direct).delta_coefficient == 0.5);
  CHECK(w1(SymmetryClass::Sp, 0.0, Side::Direct).delta_coefficient == 0.0);

  CHECK(w1(SymmetryClass::SOeven, 0.5, Side::Fourier).smooth == 0.5);
  CHECK(w1(SymmetryClass::SOeven, 1.5, Side::Fourier).smooth == 0.0);
  CHECK(w1(SymmetryClass::SOodd, 0.5, Side::Fourier).smooth == 0.5);
  CHECK(w1(SymmetryClass::SOodd, 1.5, Side::Fourier).smooth == 1.0);
  CHECK(w1(SymmetryClass::Sp, 0.5, Side::Fourier).smooth == -0.5);
  CHECK(w1(SymmetryClass::O, 7.0, Side::Fourier).smooth == 0.5);
  for (auto cls : {SymmetryClass::SOeven, SymmetryClass::O, SymmetryClass::SOodd, SymmetryClass::Sp})
    CHECK(w1(cls, 0.2, Side::Fourier).delta_coefficient == 1.0);
}

TEST_CASE("Plancherel sides agree with the hand computed integral") {
  for (double nu : {0.5, 0.9, 2.0}) {
    for (auto cls : {SymmetryClass::SOeven, SymmetryClass::O, SymmetryClass::SOodd, SymmetryClass::Sp}) {
      const auto pp = plancherel_integral(cls, TestFunction::fejer(nu));
      const double expected = fejer_fourier_side(cls, nu);
      CHECK(pp.fourier == doctest::Approx(expected).epsilon(1e-9));
      CHECK(pp.direct == doctest::Approx(expected).epsilon(1e-6));
    }
  }
  const auto c = plancherel_integral(SymmetryClass::SOeven, TestFunction::cosine_squared(0.9));
  CHECK(c.direct == doctest::Approx(1.45).epsilon(1e-6));
  CHECK(c.fourier == doctest::Approx(1.45).epsilon(1e-9));
}

TEST_CASE("one-level prediction matches the ensemble integral of the corresponding class") {
  const auto f = TestFunction::fejer(0.5);
  CHECK(predicted_one_level(1, f) == doctest::Approx(1.25));
  CHECK(predicted_one_level(2, f) == doctest::Approx(0.75));
  for (int r = 1; r <= 6; ++r) {
    const auto cls = symmetry_type(r, std::nullopt);
    CHECK(predicted_one_level(r, f) == doctest::Approx(plancherel_integral(cls, f).fourier).epsilon(1e-9));
  }
}

TEST_CASE("two-level predictions at Fejer 1/2") {
  const auto f = TestFunction::fejer(0.5);
  CHECK(predicted_two_level(2, std::nullopt, f, f) == doctest::Approx(11.0 / 48.0).epsilon(1e-12));
  CHECK(predicted_two_level(1, std::nullopt, f, f) == doctest::Approx(41.0 / 48.0).epsilon(1e-12));
  CHECK(predicted_two_level(1, +1, f, f) == doctest::Approx(35.0 / 48.0).epsilon(1e-12));
  CHECK(predicted_two_level(1, -1, f, f) == doctest::Approx(47.0 / 48.0).epsilon(1e-12));
  CHECK(predicted_two_level(4, std::nullopt, f, f) == doctest::Approx(11.0 / 48.0).epsilon(1e-12));
  CHECK_THROWS_AS(predicted_two_level(2, +1, f, f), std::invalid_argument);
  CHECK_THROWS_AS(predicted_two_level(1, 0, f, f), std::invalid_argument);
}

TEST_CASE("two-level prediction is symmetric in the two test functions") {
  const auto a = TestFunction::fejer(0.4);
  const auto b = TestFunction::cosine_squared(0.3);
  for (int r : {1, 2, 3})
    CHECK(predicted_two_level(r, std::nullopt, a, b) == doctest::Approx(predicted_two_level(r, std::nullopt, b, a)));
  CHECK(predicted_two_level(3, -1, a, b) == doctest::Approx(predicted_two_level(3, -1, b, a)));
}

TEST_CASE("variance and moments") {
  for (double nu : {0.3, 0.5, 1.0}) {
    const auto f = TestFunction::fejer(nu);
    const double s2 = nu * nu / 3.0;
    CHECK(predicted_variance(f) == doctest::Approx(s2).epsilon(1e-12));
    CHECK(predicted_moment(1, f) == 0.0);
    CHECK(predicted_moment(3, f) == 0.0);
    CHECK(predicted_moment(2, f) == doctest::Approx(s2));
    CHECK(predicted_moment(4, f) == doctest::Approx(3 * s2 * s2));
    CHECK(predicted_moment(6, f) == doctest::Approx(15 * s2 * s2 * s2));
    CHECK(predicted_moment_literal(4, f) == doctest::Approx(3 * s2));
    CHECK(predicted_moment_literal(6, f) == doctest::Approx(15 * s2));
  }
  const auto f = TestFunction::fejer(0.5);
  CHECK(predicted_moment(4, f) == doctest::Approx(1.0 / 48.0));
  CHECK(predicted_moment_literal(4, f) == doctest::Approx(0.25));
  CHECK_THROWS_AS(predicted_moment(0, f), std::invalid_argument);
}

TEST_CASE("root number table") {
  // kappa = 0 mod 4 and 2 mod 4 against r = 1, 3, 5, 7 mod 8
  const int table[2][4] = {{1, -1, -1, 1}, {-1, -1, 1, 1}};
  for (int kappa = 2; kappa <= 40; kappa += 2) {
    for (int r = 1; r < 40; r += 2) {
      const int row = kappa % 4 == 0 ? 0 : 1;
      CHECK(epsilon_kappa_r(kappa, r) == table[row][(r % 8) / 2]);
      for (int e : {1, -1}) CHECK(sign_functional_equation({kappa, r, e}) == e * table[row][(r % 8) / 2]);
    }
    for (int r = 2; r < 40; r += 2) CHECK(sign_functional_equation({kappa, r, -1}) == 1);
  }
  CHECK_THROWS_AS(epsilon_kappa_r(3, 1), std::invalid_argument);
  CHECK_THROWS_AS(sign_functional_equation({5, 2, 1}), std::invalid_argument);
}

TEST_CASE("support bounds") {
  const double theta = 7.0 / 64.0;
  for (int r = 1; r <= 8; ++r) {
    // the floor is attained at kappa = 2
    const auto low = support_bounds({r, 2, theta});
    CHECK(low.nu1max == doctest::Approx(82.0 / (57.0 * r * r)).epsilon(1e-14));
    for (int kappa = 2; kappa <= 48; kappa += 2) {
      const auto b = support_bounds({r, kappa, theta});
      CHECK(b.nu1max >= 82.0 / (57.0 * r * r) * (1 - 1e-14));
      CHECK(b.nu1max < 2.0 / (r * r));
      CHECK(b.nu1max_signed == doctest::Approx(std::min(b.nu1max, 3.0 / (r * (r + 2.0)))));
      CHECK(b.nu2max_unsigned == doctest::Approx(1.0 / (r * r)));
      CHECK(b.nu2max_signed_C == doctest::Approx(1.0 / (2.0 * r * (r + 2))));
      CHECK(b.nu2max_signed_thm == doctest::Approx(1.0 / (2.0 * r * (r + 1))));
      CHECK(b.moment_bound(4) == doctest::Approx(1.0 / (r * (r + 2.0))));
      if (r == 1) CHECK(b.nu1max > 1.0);
    }
  }
}

TEST_CASE("symmetry type dictionary") {
  CHECK(symmetry_type(2, std::nullopt) == SymmetryClass::Sp);
  CHECK(symmetry_type(1, std::nullopt) == SymmetryClass::O);
  CHECK(symmetry_type(3, +1) == SymmetryClass::SOeven);
  CHECK(symmetry_type(3, -1) == SymmetryClass::SOodd);
  CHECK(parse_symmetry_class(to_string(SymmetryClass::SOodd)) == SymmetryClass::SOodd);
  CHECK(parse_symmetry_class("sp") == SymmetryClass::Sp);
  CHECK_THROWS_AS(parse_symmetry_class("U"), std::invalid_argument);
}

TEST_CASE("zero counting") {
  const double q = 101.0;
  CHECK(mean_spacing(q, 2) == doctest::Approx(2 * kPi / std::log(q * q)));
  // N'(T) = (1/pi) log(q^r (T / 2 pi)^{r+1})
  for (int r : {1, 2, 3}) {
    const double T = 50.0, h = 1e-4;
    const double slope = (zero_count_main(T + h, q, r) - zero_count_main(T - h, q, r)) / (2 * h);
    CHECK(slope == doctest::Approx(std::log(std::pow(q, r) * std::pow(T / (2 * kPi), r + 1)) / kPi).epsilon(1e-6));
  }
}

}  // TEST_SUITE
