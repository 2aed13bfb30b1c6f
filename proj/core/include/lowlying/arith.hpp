#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

namespace lowlying::arith {

struct PrimePower {
  std::uint64_t prime;
  int exponent;
};

// n = prod p^e over `factors`, primes strictly increasing. n = 1 has no factors.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;
};

Factorization factorize(std::uint64_t n);

// tau(n)
std::uint64_t divisor_count(std::uint64_t n);

// nu(n) = n * prod_{p | n} (1 + 1/p), an integer.
std::uint64_t nu_mult(std::uint64_t n);

bool is_prime(std::uint64_t n);

// Sieve of Eratosthenes, primes p <= bound.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

// Tabulated tau(d) for 1 <= d <= bound (index 0 unused).
std::vector<std::uint32_t> divisor_count_table(std::uint64_t bound);

// Inverse of a modulo m, or nullopt when gcd(a, m) != 1. For m = 1 returns 0.
std::optional<std::uint64_t> mod_inverse(std::int64_t a, std::uint64_t m);

// Least nonnegative residue of a modulo m.
std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m);

/// Kloosterman sum S(m, n; c) = sum_{x mod c, (x,c)=1} e((m x + n xbar) / c).
///
/// The terms for x and c - x are complex conjugates, so only the cosine part
/// is accumulated. For c = 1 the single residue x = 0 contributes 1. Any
/// integers m, n are accepted; they only matter modulo c.
double kloosterman(std::int64_t m, std::int64_t n, std::uint64_t c);

// Same sum accumulated in complex arithmetic; used to check realness.
std::complex<double> kloosterman_complex(std::int64_t m, std::int64_t n,
                                         std::uint64_t c);

/// S(m qbar^2, n; r) * S(m rbar^2, n; q) for coprime q, r, where qbar is the
/// inverse of q mod r and rbar the inverse of r mod q. Equals S(m, n; qr).
/// Throws std::invalid_argument when gcd(q, r) != 1.
double kloosterman_crt(std::int64_t m, std::int64_t n, std::uint64_t q,
                       std::uint64_t r);

// S(p^gamma q, 1; q r) evaluated by direct summation (p, q primes).
double kloosterman_special(std::uint64_t p, int gamma, std::uint64_t q,
                           std::uint64_t r);

// Closed form of the same quantity: -S(p^gamma qbar, 1; r) if (q, r) = 1, else 0.
double kloosterman_special_closed_form(std::uint64_t p, int gamma,
                                       std::uint64_t q, std::uint64_t r);

// sqrt(gcd(m, n, c)) * tau(c) * sqrt(c)
double weil_bound(std::int64_t m, std::int64_t n, std::uint64_t c);

}  // namespace lowlying::arith
