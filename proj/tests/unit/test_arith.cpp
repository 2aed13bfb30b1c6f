#include <doctest.h>

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lowlying/arith.hpp"

using namespace lowlying::arith;

namespace {

// Straight from the definition, with gcd tested per residue and e(t) via std::polar.
std::complex<double> kloosterman_naive(std::int64_t m, std::int64_t n, std::uint64_t c) {
  std::complex<double> s = 0.0;
  const auto C = static_cast<std::int64_t>(c);
  for (std::int64_t x = 0; x < C; ++x) {
    if (std::gcd(x, C) != 1) continue;
    std::int64_t xbar = 0;
    while ((x * xbar) % C != 1 % C) ++xbar;
    const std::int64_t t = ((m * x + n * xbar) % C + C) % C;
    s += std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(t) / static_cast<double>(C));
  }
  return s;
}

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  return n > 1 ? -mu : mu;
}

std::uint64_t totient(std::uint64_t n) {
  std::uint64_t t = 0;
  for (std::uint64_t k = 1; k <= n; ++k) t += std::gcd(k, n) == 1;
  return t;
}

}  // namespace

TEST_SUITE("arith") {

TEST_CASE("factorize recombines to n with increasing primes") {
  for (std::uint64_t n = 1; n < 3000; ++n) {
    const auto f = factorize(n);
    std::uint64_t prod = 1, last = 1;
    for (const auto& pp : f.factors) {
      CHECK(pp.prime > last);
      CHECK(is_prime(pp.prime));
      for (int e = 0; e < pp.exponent; ++e) prod *= pp.prime;
      last = pp.prime;
    }
    CHECK(prod == n);
  }
  CHECK(factorize(1).factors.empty());
  CHECK(factorize(600851475143ULL).factors.back().prime == 6857);
}

TEST_CASE("divisor counts and nu against direct enumeration") {
  const auto table = divisor_count_table(500);
  for (std::uint64_t n = 1; n <= 500; ++n) {
    std::uint64_t d = 0, nu_num = n;
    for (std::uint64_t k = 1; k <= n; ++k) d += n % k == 0;
    CHECK(divisor_count(n) == d);
    CHECK(table[n] == d);
    for (const auto& pp : factorize(n).factors) nu_num = nu_num / pp.prime * (pp.prime + 1);
    CHECK(nu_mult(n) == nu_num);
  }
  CHECK(nu_mult(12) == 24);
}

TEST_CASE("primes_up_to matches trial division") {
  const auto ps = primes_up_to(1000);
  std::size_t idx = 0;
  for (std::uint64_t n = 2; n <= 1000; ++n) {
    bool prime = true;
    for (std::uint64_t d = 2; d * d <= n; ++d) prime = prime && n % d != 0;
    CHECK(is_prime(n) == prime);
    if (prime) {
      REQUIRE(idx < ps.size());
      CHECK(ps[idx++] == n);
    }
  }
  CHECK(idx == ps.size());
  CHECK(ps.size() == 168);
}

TEST_CASE("mod_inverse and mod_reduce") {
  for (std::uint64_t m = 2; m < 60; ++m) {
    for (std::int64_t a = -70; a < 70; ++a) {
      const auto inv = mod_inverse(a, m);
      const auto g = std::gcd(static_cast<std::uint64_t>(std::abs(a)), m);
      CHECK(inv.has_value() == (g == 1));
      if (inv) CHECK((mod_reduce(a, m) * *inv) % m == 1);
      CHECK(mod_reduce(a, m) < m);
      CHECK((static_cast<std::int64_t>(mod_reduce(a, m)) - a) % static_cast<std::int64_t>(m) == 0);
    }
  }
  CHECK(mod_inverse(5, 1) == std::optional<std::uint64_t>(0));
}

TEST_CASE("Kloosterman sums against the definition") {
  for (std::uint64_t c = 1; c <= 40; ++c) {
    for (std::int64_t m = -3; m <= 5; ++m) {
      for (std::int64_t n = 0; n <= 4; ++n) {
        const auto ref = kloosterman_naive(m, n, c);
        CHECK(kloosterman(m, n, c) == doctest::Approx(ref.real()).epsilon(1e-12).scale(c));
        CHECK(std::abs(ref.imag()) < 1e-9);
        CHECK(std::abs(kloosterman_complex(m, n, c) - ref) < 1e-9);
      }
    }
  }
}

TEST_CASE("Ramanujan sums: S(m, 0; c)") {
  for (std::uint64_t c = 1; c <= 200; ++c) {
    CHECK(kloosterman(0, 0, c) == doctest::Approx(static_cast<double>(totient(c))));
    CHECK(kloosterman(1, 0, c) == doctest::Approx(mobius(c)).scale(1.0).epsilon(1e-9));
  }
}

TEST_CASE("Kloosterman symmetries") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> pick(-500, 500);
  for (int t = 0; t < 200; ++t) {
    const auto c = static_cast<std::uint64_t>(1 + (rng() % 300));
    const auto m = pick(rng), n = pick(rng);
    const double s = kloosterman(m, n, c);
    CHECK(kloosterman(n, m, c) == doctest::Approx(s).scale(c));
    CHECK(kloosterman(-m, -n, c) == doctest::Approx(s).scale(c));
    CHECK(kloosterman(m + static_cast<std::int64_t>(c), n, c) == doctest::Approx(s).scale(c));
    // S(am, n; c) = S(m, an; c) for a a unit mod c
    if (std::gcd<std::uint64_t>(7, c) == 1)
      CHECK(kloosterman(7 * m, n, c) == doctest::Approx(kloosterman(m, 7 * n, c)).scale(c));
  }
}

TEST_CASE("twisted multiplicativity over coprime moduli") {
  std::mt19937_64 rng(11);
  int tried = 0;
  while (tried < 100) {
    const auto q = static_cast<std::uint64_t>(2 + rng() % 60), r = static_cast<std::uint64_t>(2 + rng() % 60);
    if (std::gcd(q, r) != 1) continue;
    ++tried;
    const auto m = static_cast<std::int64_t>(rng() % 1000), n = static_cast<std::int64_t>(rng() % 1000);
    CHECK(kloosterman_crt(m, n, q, r) == doctest::Approx(kloosterman(m, n, q * r)).scale(q * r).epsilon(1e-10));
  }
  CHECK_THROWS_AS(kloosterman_crt(1, 1, 6, 4), std::invalid_argument);
}

TEST_CASE("S(p^g q, 1; q r) closed form") {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (std::uint64_t q : {3, 5, 11, 13}) {
      if (p == q) continue;
      for (int g = 0; g <= 3; ++g) {
        for (std::uint64_t r = 1; r <= 40; ++r) {
          CHECK(kloosterman_special(p, g, q, r) ==
                doctest::Approx(kloosterman_special_closed_form(p, g, q, r)).scale(q * r).epsilon(1e-10));
        }
      }
    }
  }
  // (q, r) > 1 kills the sum
  CHECK(kloosterman_special_closed_form(2, 1, 5, 10) == 0.0);
  CHECK(std::abs(kloosterman_special(2, 1, 5, 10)) < 1e-9);
}

TEST_CASE("Weil bound holds") {
  for (std::uint64_t c = 1; c <= 600; ++c) {
    for (std::int64_t m : {1, 2, 3, 12}) {
      for (std::int64_t n : {1, 4, 9}) CHECK(std::abs(kloosterman(m, n, c)) <= weil_bound(m, n, c) * (1 + 1e-12));
    }
  }
  CHECK(weil_bound(1, 1, 7) == doctest::Approx(2.0 * std::sqrt(7.0)));
}

}  // TEST_SUITE
