#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "lowlying/chebyshev.hpp"

using namespace lowlying::chebyshev;

namespace {

BigInt binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace

TEST_SUITE("chebyshev") {

TEST_CASE("X_r(2 cos t) = sin((r+1)t) / sin t") {
  for (int r = 0; r <= 30; ++r) {
    for (double t = 0.05; t < 3.1; t += 0.1) {
      CHECK(chebyshev_eval(r, 2.0 * std::cos(t)) ==
            doctest::Approx(std::sin((r + 1) * t) / std::sin(t)).scale(r + 1.0).epsilon(1e-11));
    }
    CHECK(chebyshev_eval(r, 2.0) == doctest::Approx(r + 1.0));
  }
}

TEST_CASE("X_1^varpi coefficients are ballot numbers") {
  for (int varpi = 0; varpi <= 40; ++varpi) {
    const auto t = linearization_table(varpi, 1);
    for (int j = 0; j <= varpi; ++j) {
      BigInt expected = 0;
      if ((varpi - j) % 2 == 0) {
        const int k = (varpi - j) / 2;
        expected = binom(varpi, k) - binom(varpi, k - 1);
      }
      CHECK(t.at(j) == expected);
    }
  }
}

TEST_CASE("evaluating the expansion at x = 2 gives (r+1)^varpi exactly") {
  for (int r = 1; r <= 8; ++r) {
    for (int varpi = 1; varpi <= 12; ++varpi) {
      const auto t = linearization_table(varpi, r);
      BigInt total = 0, expected = 1;
      for (int j = 0; j <= r * varpi; ++j) total += t.at(j) * (j + 1);
      for (int k = 0; k < varpi; ++k) expected *= r + 1;
      CHECK(total == expected);
    }
  }
}

TEST_CASE("coefficients vanish off the parity of r varpi and are nonnegative") {
  for (int r = 1; r <= 6; ++r) {
    for (int varpi = 1; varpi <= 6; ++varpi) {
      const auto t = linearization_table(varpi, r);
      for (int j = 0; j <= r * varpi; ++j) {
        CHECK(t.at(j) >= 0);
        if ((r * varpi - j) % 2 != 0) CHECK(t.at(j) == 0);
      }
      CHECK(t.at(r * varpi) == 1);
    }
  }
  // X_r^2 = X_0 + X_2 + ... + X_{2r}: the multiplicity of the trivial piece is 1
  for (int r = 0; r <= 10; ++r) CHECK(linearization_table(2, r).at(0) == 1);
}

TEST_CASE("quadrature agrees with the exact coefficients") {
  for (int varpi = 1; varpi <= 6; ++varpi) {
    for (int r = 1; r <= 6; ++r) {
      const auto t = linearization_table(varpi, r);
      for (int j = 0; j <= r * varpi; ++j)
        CHECK(linearization_quadrature(varpi, r, j) == doctest::Approx(t.at(j).convert_to<double>()).epsilon(1e-8).scale(1.0));
    }
  }
}

TEST_CASE("linearization degree limit") {
  CHECK_THROWS_AS(linearization_table(101, 100), std::invalid_argument);
}

TEST_CASE("Hecke extension") {
  HeckeSystem sys;
  sys.prime_values = {{2, 0.3}, {3, -1.1}, {5, 1.7}};
  CHECK(hecke_extend(sys, 1) == 1.0);
  CHECK(hecke_extend(sys, 4) == doctest::Approx(0.3 * 0.3 - 1.0));
  CHECK(hecke_extend(sys, 8) == doctest::Approx(chebyshev_eval(3, 0.3)));
  CHECK(hecke_extend(sys, 60) == doctest::Approx(hecke_extend(sys, 4) * (-1.1) * 1.7));
  // lambda(p) lambda(p^k) = lambda(p^{k+1}) + lambda(p^{k-1})
  for (int k = 1; k < 8; ++k) {
    const auto pk = static_cast<std::uint64_t>(std::pow(3, k));
    CHECK(-1.1 * hecke_extend(sys, pk) ==
          doctest::Approx(hecke_extend(sys, pk * 3) + hecke_extend(sys, pk / 3)));
  }
  CHECK_THROWS_AS(hecke_extend(sys, 14), std::out_of_range);

  sys.level = 7;
  sys.level_value = -0.5;
  CHECK(hecke_extend(sys, 49 * 2) == doctest::Approx(0.25 * 0.3));
}

}  // TEST_SUITE
