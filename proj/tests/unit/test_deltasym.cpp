#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "lowlying/arith.hpp"
#include "lowlying/deltasym.hpp"

using namespace lowlying;

TEST_SUITE("deltasym") {

TEST_CASE("Bessel J against the standard library") {
  for (int n : {0, 1, 5, 9, 11, 23}) {
    for (double x : {0.0, 0.01, 0.7, 3.0, 9.9, 15.0, 33.3, 80.0, 250.0, 1234.5}) {
      const double ref = std::cyl_bessel_j(static_cast<double>(n), x);
      CHECK(bessel_j(n, x) == doctest::Approx(ref).scale(1.0).epsilon(1e-10));
    }
  }
  CHECK(bessel_j(0, 0.0) == 1.0);
  CHECK(bessel_j(3, 0.0) == 0.0);
}

TEST_CASE("series and integral agree where both apply") {
  for (int n : {0, 4, 11}) {
    for (double x = 0.5; x < n + 30; x += 1.7)
      CHECK(bessel_j_series(n, x) == doctest::Approx(bessel_j_integral(n, x)).scale(1.0).epsilon(1e-12));
  }
}

TEST_CASE("Bessel recurrence J_{n-1} + J_{n+1} = (2n/x) J_n") {
  for (int n = 1; n < 20; ++n)
    for (double x : {0.3, 4.0, 27.0, 600.0})
      CHECK(bessel_j(n - 1, x) + bessel_j(n + 1, x) == doctest::Approx(2.0 * n / x * bessel_j(n, x)).scale(1.0).epsilon(1e-9));
}

TEST_CASE("tau from the eta product") {
  const long long known[] = {1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920,
                             534612, -370944, -577738, 401856, 1217160, 987136};
  const TauTable t(200);
  for (int n = 1; n <= 16; ++n) CHECK(t.tau(n) == known[n - 1]);
  CHECK(ramanujan_tau(2) == -24);
  // multiplicativity and the Hecke relation at p = 2, 3, 5
  for (int m = 1; m <= 14; ++m)
    for (int n = 1; n <= 14; ++n)
      if (std::gcd(m, n) == 1) CHECK(t.tau(m * n) == t.tau(m) * t.tau(n));
  for (int p : {2, 3, 5}) {
    BigInt p11 = 1;
    for (int i = 0; i < 11; ++i) p11 *= p;
    for (int pk = p; pk * p <= 200; pk *= p) CHECK(t.tau(p) * t.tau(pk) == t.tau(pk * p) + p11 * t.tau(pk / p));
  }
  // Deligne: |tau(p)| <= 2 p^{11/2}
  for (int p = 2; p <= 200; ++p)
    if (arith::is_prime(p)) CHECK(std::abs(t.normalized(p)) <= 2.0);
  CHECK(t.normalized(4) == doctest::Approx(-1472.0 / 2048.0));
  CHECK_THROWS_AS(TauTable(0), std::invalid_argument);
  CHECK_THROWS_AS(TauTable(10001), std::invalid_argument);
}

TEST_CASE("tau Hecke system reproduces the table") {
  const auto sys = tau_hecke_system(50);
  const TauTable t(100);
  for (int n = 1; n <= 100; ++n) {
    bool ok = true;
    for (const auto& pp : arith::factorize(n).factors) ok = ok && pp.prime <= 50;
    if (ok) CHECK(chebyshev::hecke_extend(sys, n) == doctest::Approx(t.normalized(n)).epsilon(1e-10));
  }
}

TEST_CASE("cusp space dimension") {
  const int expected[] = {0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 2, 1};  // kappa = 2, 4, ..., 26
  for (int i = 0; i < 13; ++i) CHECK(cusp_space_dimension(2 * i + 2) == expected[i]);
}

TEST_CASE("Delta symbol basic properties") {
  const DeltaParams dp{1, 10, 1e-10, 1};
  for (std::uint64_t m = 1; m <= 6; ++m) {
    for (std::uint64_t n = 1; n <= 6; ++n) {
      CHECK(std::abs(delta_symbol(dp, m, n)) < 1e-6);  // empty weight 10 cusp space
      CHECK(delta_symbol({1, 16, 1e-10, 1}, m, n) == doctest::Approx(delta_symbol({1, 16, 1e-10, 1}, n, m)));
    }
  }
  // Delta_1(1,1) at weight 12 is positive; the rank-one relation Delta(m,n) Delta(1,1) = Delta(m,1) Delta(n,1)
  const DeltaParams d12{1, 12, 1e-10, 1};
  const double d11 = delta_symbol(d12, 1, 1);
  CHECK(d11 > 0.0);
  CHECK(delta_symbol(d12, 2, 3) * d11 == doctest::Approx(delta_symbol(d12, 2, 1) * delta_symbol(d12, 3, 1)).epsilon(1e-6));
  CHECK(delta_symbol(d12, 2, 1) / d11 == doctest::Approx(-24.0 / std::pow(2.0, 5.5)).epsilon(1e-7));
}

TEST_CASE("Delta symbol truncation") {
  const auto r = delta_symbol_detailed({1, 12, 1e-9, 1}, 4, 7);
  CHECK(r.tail_bound <= 1e-9);
  CHECK(delta_tail_bound(12, 4, 7, static_cast<double>(r.c_max)) <= 1e-9);
  CHECK(delta_tail_bound(12, 4, 7, 100.0) > delta_tail_bound(12, 4, 7, 200.0));
  const auto finer = delta_symbol_detailed({1, 12, 1e-11, 1}, 4, 7);
  CHECK(std::abs(finer.value - r.value) <= r.tail_bound + finer.tail_bound);
  // at a large level the first modulus q is already past the cutoff, so Delta is delta_{m,n}
  const auto lvl = delta_symbol_detailed({101, 12, 1e-10, 1}, 3, 5);
  CHECK(lvl.c_max < 101);
  CHECK(lvl.value == 0.0);
  CHECK(delta_symbol({101, 12, 1e-10, 1}, 5, 5) == 1.0);
  // the workers do not change the sum
  const auto big = delta_symbol_detailed({11, 12, 1e-10, 1}, 40, 90);
  CHECK(big.c_max > 1000);
  CHECK(delta_symbol({11, 12, 1e-10, 3}, 40, 90) == doctest::Approx(big.value).epsilon(1e-13));
}

TEST_CASE("Delta symbol argument checks") {
  CHECK_THROWS_AS(delta_symbol({1, 11, 1e-8, 1}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(delta_symbol({12, 12, 1e-8, 1}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(delta_symbol({1, 12, 1e-8, 1}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(delta_symbol({1, 12, 1e-8, 1}, 1001, 1000), std::invalid_argument);
}

TEST_CASE("Petersson suites") {
  const auto z = petersson_ratio_suite(10, 8);
  CHECK(z.pass);
  CHECK(z.max_deviation < 1e-6);
  CHECK(z.checks.size() == 36);  // m <= n
  const auto t = petersson_ratio_suite(12, 8);
  CHECK(t.pass);
  CHECK(t.failures.empty());
  CHECK_THROWS_AS(petersson_ratio_suite(14, 5), std::invalid_argument);
  CHECK_THROWS_AS(petersson_ratio_suite(12, 31), std::invalid_argument);
}

TEST_CASE("prime sums") {
  const auto f = TestFunction::fejer(0.5);
  // no level-one forms of weight 10: the old-form sum vanishes identically
  const auto old10 = prime_sum_first({11, 10, 1, 1e-8, 1}, f, PrimeSumMode::Old);
  CHECK(old10.value == 0.0);
  CHECK(old10.truncation == 0.0);

  const auto nw = prime_sum_first({11, 12, 1, 1e-8, 1}, f, PrimeSumMode::New);
  const auto old = prime_sum_first({11, 12, 1, 1e-8, 1}, f, PrimeSumMode::Old);
  const auto avg = prime_sum_first({11, 12, 1, 1e-8, 1}, f, PrimeSumMode::HarmonicAverage);
  CHECK(std::isfinite(nw.value));
  CHECK(avg.value == doctest::Approx(nw.value + old.value).scale(1.0).epsilon(1e-9));
  CHECK(nw.primes > 0);

  const auto sys = tau_hecke_system(200);
  const PrimeSumParams pp{11, 12, 3, 1e-8, 1};
  const auto alt = prime_sum_second_alternating(pp, TestFunction::fejer(0.3), sys);
  CHECK(alt.by_m == doctest::Approx(alt.by_j).epsilon(1e-12));
  CHECK_THROWS_AS(prime_sum_first({12, 12, 1, 1e-8, 1}, f, PrimeSumMode::New), std::invalid_argument);
  CHECK_THROWS_AS(prime_sum_second(pp, 0, f, EigenSource::Hecke), std::invalid_argument);
}

TEST_CASE("sieve monitor") {
  const auto ps = primes_avoiding(10, 3);
  CHECK(ps.size() == 10);
  CHECK(std::find(ps.begin(), ps.end(), 3) == ps.end());
  CHECK(ps.front() == 2);
  CHECK(ps.back() == 31);

  const std::vector<double> a(6, 1.0), b = {1.0, -0.5, 0.25, 0.0, 2.0, -1.0};
  const auto rec = sieve_form_monitor({101, 1, 1, 12, 1, 7.0 / 64.0, 1e-10}, a, b, TestFunction::fejer(0.9));
  CHECK(std::isfinite(rec.lhs));
  CHECK(rec.rhs_envelope > 0.0);
  CHECK(rec.ratio == doctest::Approx(std::abs(rec.lhs) / rec.rhs_envelope));
  CHECK(rec.tail_bound <= 1e-10);
}

}  // TEST_SUITE
