#include "lowlying/arith.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lowlying::arith {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

}  // namespace

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  Factorization f{n, {}};
  auto take = [&](std::uint64_t p) {
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) f.factors.push_back({p, e});
  };
  take(2);
  take(3);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    take(p);
    take(p + 2);
  }
  if (n > 1) f.factors.push_back({n, 1});
  return f;
}

std::uint64_t divisor_count(std::uint64_t n) {
  std::uint64_t d = 1;
  for (const auto& pe : factorize(n).factors) d *= static_cast<std::uint64_t>(pe.exponent + 1);
  return d;
}

std::uint64_t nu_mult(std::uint64_t n) {
  std::uint64_t result = n;
  for (const auto& pe : factorize(n).factors) result = result / pe.prime * (pe.prime + 1);
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  const auto f = factorize(n);
  return f.factors.size() == 1 && f.factors[0].exponent == 1;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> primes;
  if (bound < 2) return primes;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::uint32_t> divisor_count_table(std::uint64_t bound) {
  std::vector<std::uint32_t> tau(bound + 1, 0);
  for (std::uint64_t d = 1; d <= bound; ++d)
    for (std::uint64_t k = d; k <= bound; k += d) ++tau[k];
  return tau;
}

std::uint64_t mod_reduce(std::int64_t a, std::uint64_t m) {
  if (a >= 0) return static_cast<std::uint64_t>(a) % m;
  const std::uint64_t r = static_cast<std::uint64_t>(-(a + 1)) % m;
  return m - 1 - r;
}

std::optional<std::uint64_t> mod_inverse(std::int64_t a, std::uint64_t m) {
  if (m == 0) throw std::invalid_argument("mod_inverse: modulus must be positive");
  if (m == 1) return 0;
  // Extended Euclid on (a mod m, m) with signed 128-bit cofactors.
  __int128 old_r = mod_reduce(a, m), r = m;
  __int128 old_s = 1, s = 0;
  while (r != 0) {
    const __int128 quot = old_r / r;
    __int128 tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  __int128 inv = old_s % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<std::uint64_t>(inv);
}

double kloosterman(std::int64_t m, std::int64_t n, std::uint64_t c) {
  if (c == 0) throw std::invalid_argument("kloosterman: modulus must be positive");
  if (c == 1) return 1.0;
  const std::uint64_t mr = mod_reduce(m, c);
  const std::uint64_t nr = mod_reduce(n, c);
  const double scale = 2.0 * std::numbers::pi / static_cast<double>(c);
  double sum = 0.0;
  for (std::uint64_t x = 1; x < c; ++x) {
    const auto inv = mod_inverse(static_cast<std::int64_t>(x), c);
    if (!inv) continue;
    const std::uint64_t phase = (mul_mod(mr, x, c) + mul_mod(nr, *inv, c)) % c;
    sum += std::cos(scale * static_cast<double>(phase));
  }
  return sum;
}

std::complex<double> kloosterman_complex(std::int64_t m, std::int64_t n, std::uint64_t c) {
  if (c == 0) throw std::invalid_argument("kloosterman: modulus must be positive");
  if (c == 1) return {1.0, 0.0};
  const std::uint64_t mr = mod_reduce(m, c);
  const std::uint64_t nr = mod_reduce(n, c);
  const double scale = 2.0 * std::numbers::pi / static_cast<double>(c);
  std::complex<double> sum{0.0, 0.0};
  for (std::uint64_t x = 1; x < c; ++x) {
    const auto inv = mod_inverse(static_cast<std::int64_t>(x), c);
    if (!inv) continue;
    const std::uint64_t phase = (mul_mod(mr, x, c) + mul_mod(nr, *inv, c)) % c;
    sum += std::polar(1.0, scale * static_cast<double>(phase));
  }
  return sum;
}

double kloosterman_crt(std::int64_t m, std::int64_t n, std::uint64_t q, std::uint64_t r) {
  if (q == 0 || r == 0) throw std::invalid_argument("kloosterman_crt: moduli must be positive");
  if (std::gcd(q, r) != 1)
    throw std::invalid_argument("kloosterman_crt: gcd(" + std::to_string(q) + ", " +
                                std::to_string(r) + ") != 1");
  const std::uint64_t qbar = *mod_inverse(static_cast<std::int64_t>(q % r), r);
  const std::uint64_t rbar = *mod_inverse(static_cast<std::int64_t>(r % q), q);
  const std::uint64_t m_r = mul_mod(mod_reduce(m, r), mul_mod(qbar, qbar, r), r);
  const std::uint64_t m_q = mul_mod(mod_reduce(m, q), mul_mod(rbar, rbar, q), q);
  return kloosterman(static_cast<std::int64_t>(m_r), n, r) *
         kloosterman(static_cast<std::int64_t>(m_q), n, q);
}

double kloosterman_special(std::uint64_t p, int gamma, std::uint64_t q, std::uint64_t r) {
  const std::uint64_t c = q * r;
  const std::uint64_t m = mul_mod(pow_mod(p, static_cast<std::uint64_t>(gamma), c), q % c, c);
  return kloosterman(static_cast<std::int64_t>(m), 1, c);
}

double kloosterman_special_closed_form(std::uint64_t p, int gamma, std::uint64_t q,
                                       std::uint64_t r) {
  if (std::gcd(q, r) != 1) return 0.0;
  const std::uint64_t qbar = *mod_inverse(static_cast<std::int64_t>(q % r), r);
  const std::uint64_t m = mul_mod(pow_mod(p, static_cast<std::uint64_t>(gamma), r), qbar, r);
  return -kloosterman(static_cast<std::int64_t>(m), 1, r);
}

double weil_bound(std::int64_t m, std::int64_t n, std::uint64_t c) {
  const std::uint64_t g = std::gcd(std::gcd(mod_reduce(m, c), mod_reduce(n, c)), c);
  return std::sqrt(static_cast<double>(g == 0 ? c : g)) *
         static_cast<double>(divisor_count(c)) * std::sqrt(static_cast<double>(c));
}

}  // namespace lowlying::arith
