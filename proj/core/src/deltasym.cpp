#include "lowlying/deltasym.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>

#include "lowlying/arith.hpp"

namespace lowlying {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::uint64_t kBlock = 64;

void check_kappa(int kappa, const char* who) {
  if (kappa < 4 || kappa % 2 != 0)
    throw std::invalid_argument(std::string(who) + ": weight must be even and >= 4, got " +
                                std::to_string(kappa));
}

void check_level(std::uint64_t q, const char* who) {
  if (q != 1 && !arith::is_prime(q))
    throw std::invalid_argument(std::string(who) + ": level must be 1 or prime, got " + std::to_string(q));
}

double pairwise_sum(std::span<const double> v) {
  if (v.empty()) return 0.0;
  if (v.size() == 1) return v[0];
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.subspan(0, half)) + pairwise_sum(v.subspan(half));
}

/// Sums f(c) over c = q, 2q, ..., <= c_max in fixed blocks of kBlock moduli.
/// Block partials are combined pairwise, so the result is the same for every
/// worker count.
template <typename F>
double sum_over_moduli(std::uint64_t q, std::uint64_t c_max, int workers, F&& f) {
  const std::uint64_t count = c_max / q;
  if (count == 0) return 0.0;
  const std::uint64_t blocks = (count + kBlock - 1) / kBlock;
  std::vector<double> partial(blocks, 0.0);
  const auto run_block = [&](std::uint64_t b) {
    double s = 0.0;
    const std::uint64_t lo = b * kBlock + 1;
    const std::uint64_t hi = std::min(count, (b + 1) * kBlock);
    for (std::uint64_t k = lo; k <= hi; ++k) s += f(k * q);
    partial[b] = s;
  };
  const auto threads = static_cast<std::uint64_t>(std::max(1, workers));
  if (threads == 1 || blocks == 1) {
    for (std::uint64_t b = 0; b < blocks; ++b) run_block(b);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < threads; ++w) {
      pool.emplace_back([&, w]() {
        for (std::uint64_t b = w; b < blocks; b += threads) run_block(b);
      });
    }
    for (auto& t : pool) t.join();
  }
  return pairwise_sum(partial);
}

// Smallest C with delta_tail_bound(kappa, m, n, C) * scale < tol.
std::uint64_t truncation_point(int kappa, std::uint64_t m, std::uint64_t n, double scale, double tol) {
  if (scale == 0.0) return 0;
  const double at_one = delta_tail_bound(kappa, m, n, 1.0) * scale;
  if (at_one < tol) return 1;
  const double c = std::ceil(std::pow(at_one / tol, 1.0 / (kappa - 2)));
  if (c > static_cast<double>(kMaxModulus)) {
    std::ostringstream os;
    os << "delta_symbol: tolerance " << tol << " needs moduli beyond " << kMaxModulus
       << "; best achievable is " << delta_tail_bound(kappa, m, n, kMaxModulus) * scale;
    throw std::runtime_error(os.str());
  }
  auto result = static_cast<std::uint64_t>(c);
  while (result > 1 && delta_tail_bound(kappa, m, n, result - 1) * scale < tol) --result;
  return result;
}

BigInt to_big(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  BigInt r = static_cast<std::uint64_t>(u >> 64);
  r <<= 64;
  r += static_cast<std::uint64_t>(u);
  return negative ? BigInt(-r) : r;
}

using Poly = std::vector<__int128>;

Poly multiply_truncated(const Poly& a, const Poly& b, std::size_t degree) {
  Poly out(degree + 1, 0);
  for (std::size_t i = 0; i < a.size() && i <= degree; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= degree; ++j) {
      __int128 prod;
      if (__builtin_mul_overflow(a[i], b[j], &prod) || __builtin_add_overflow(out[i + j], prod, &out[i + j]))
        throw std::overflow_error("TauTable: 128-bit overflow");
    }
  }
  return out;
}

double tau_normalized_from(const BigInt& t, int n) {
  return t.convert_to<double>() / std::pow(static_cast<double>(n), 5.5);
}

std::uint64_t checked_power(std::uint64_t base, int exponent, std::uint64_t limit) {
  std::uint64_t v = 1;
  for (int i = 0; i < exponent; ++i) {
    if (v > limit / base) return limit + 1;
    v *= base;
  }
  return v;
}

struct WeightedPrime {
  std::uint64_t p;
  double weight;
};

/// The harmonic average of sum_p w_p lambda(p^k):
///   new: -2/L sum_p Delta_q(p^k, 1) w_p
///   old: 2/(q L) sum_{l | q^inf} 1/l sum_p Delta_1(p^k l^2, 1) w_p
PrimeSumResult averaged_prime_sum(const PrimeSumParams& pp, int k, const std::vector<WeightedPrime>& ws,
                                  PrimeSumMode mode) {
  const double L = pp.r * std::log(static_cast<double>(pp.q));
  PrimeSumResult out;
  out.primes = ws.size();

  if (mode != PrimeSumMode::Old) {
    DeltaParams dp{pp.q, pp.kappa, pp.tol, pp.workers};
    double s = 0.0;
    for (const auto& [p, w] : ws) {
      const std::uint64_t n = checked_power(p, k, kMaxDeltaProduct);
      if (n > kMaxDeltaProduct)
        throw std::invalid_argument("prime sum: p^k = " + std::to_string(p) + "^" + std::to_string(k) +
                                    " exceeds 1e6");
      const DeltaResult d = delta_symbol_detailed(dp, n, 1);
      s += d.value * w;
      out.truncation += 2.0 / L * std::abs(w) * d.tail_bound;
    }
    out.value += -2.0 / L * s;
  }

  if (mode != PrimeSumMode::New && !ws.empty() && cusp_space_dimension(pp.kappa) > 0) {
    const double q = static_cast<double>(pp.q);
    DeltaParams dp{1, pp.kappa, pp.tol, pp.workers};
    const double d11 = delta_symbol(dp, 1, 1);
    double weight_mass = 0.0;
    for (const auto& wp : ws) weight_mass += std::abs(wp.weight);
    // |Delta_1(n,1)| <= d(n) Delta_1(1,1) and d(p^k q^{2a}) = (k+1)(2a+1), so the
    // terms with a >= A are bounded by prefix * sum_{a >= A} (2a+1) q^{-a}.
    const double prefix = 2.0 / (q * L) * d11 * (k + 1) * weight_mass;
    const auto remainder = [&](int A) {
      const double x = 1.0 / q;
      return prefix * std::pow(x, A) * ((2.0 * A + 1.0) / (1.0 - x) + 2.0 * x / ((1.0 - x) * (1.0 - x)));
    };
    double s = 0.0;
    double truncation = remainder(0);
    std::uint64_t ell = 1;
    for (int a = 0; a <= 8; ++a) {
      bool in_range = true;
      for (const auto& wp : ws) {
        if (checked_power(wp.p, k, kMaxDeltaProduct) > kMaxDeltaProduct / (ell * ell)) in_range = false;
      }
      if (!in_range) break;
      double inner = 0.0;
      double inner_tail = 0.0;
      for (const auto& [p, w] : ws) {
        const DeltaResult d = delta_symbol_detailed(dp, checked_power(p, k, kMaxDeltaProduct) * ell * ell, 1);
        inner += d.value * w;
        inner_tail += std::abs(w) * d.tail_bound;
      }
      s += inner / static_cast<double>(ell);
      out.truncation += 2.0 / (q * L) * inner_tail / static_cast<double>(ell);
      truncation = remainder(a + 1);
      if (truncation < pp.tol) break;
      if (ell > kMaxDeltaProduct / pp.q) break;
      ell *= pp.q;
    }
    out.value += 2.0 / (q * L) * s;
    out.truncation += truncation;
  }
  return out;
}

void check_prime_sum_params(const PrimeSumParams& pp, const TestFunction& tf, const char* who) {
  check_kappa(pp.kappa, who);
  if (pp.q < 2 || !arith::is_prime(pp.q))
    throw std::invalid_argument(std::string(who) + ": q must be prime, got " + std::to_string(pp.q));
  if (pp.r < 1) throw std::invalid_argument(std::string(who) + ": r must be >= 1");
  const double range = std::pow(static_cast<double>(pp.q), pp.r * tf.nu());
  if (range > kMaxPrimeRange)
    throw std::invalid_argument(std::string(who) + ": prime range q^(r nu) = " + std::to_string(range) +
                                " exceeds 1e6");
}

// Primes p != q with hat(scale * log p / log q^r) != 0, weighted by log p / p^power.
std::vector<WeightedPrime> weighted_primes(const PrimeSumParams& pp, const TestFunction& tf, double scale,
                                           double power) {
  const double L = pp.r * std::log(static_cast<double>(pp.q));
  const double bound = std::exp(tf.nu() * L / scale);
  std::vector<WeightedPrime> ws;
  for (std::uint64_t p : arith::primes_up_to(static_cast<std::uint64_t>(std::floor(bound)))) {
    if (p == pp.q) continue;
    const double lp = std::log(static_cast<double>(p));
    const double h = tf.phi_hat(scale * lp / L);
    if (h == 0.0) continue;
    ws.push_back({p, lp / std::pow(static_cast<double>(p), power) * h});
  }
  return ws;
}

}  // namespace

// ---------------------------------------------------------------- Delta symbol

double delta_tail_bound(int kappa, std::uint64_t m, std::uint64_t n, double C) {
  const double g = static_cast<double>(std::gcd(m, n));
  const double A = 2.0 * kPi * std::sqrt(static_cast<double>(m) * static_cast<double>(n));
  const double log_bound = std::log(2.0 * kPi) + 0.5 * std::log(g) + (kappa - 1) * std::log(A) -
                           std::lgamma(static_cast<double>(kappa)) + std::log(2.0) -
                           (kappa - 2) * std::log(C) - std::log(kappa - 2.0);
  return std::exp(log_bound);
}

DeltaResult delta_symbol_detailed(const DeltaParams& dp, std::uint64_t m, std::uint64_t n) {
  check_kappa(dp.kappa, "delta_symbol");
  check_level(dp.q, "delta_symbol");
  if (m == 0 || n == 0) throw std::invalid_argument("delta_symbol: m and n must be positive");
  if (m > kMaxDeltaProduct / n)
    throw std::invalid_argument("delta_symbol: m n = " + std::to_string(m) + " * " + std::to_string(n) +
                                " exceeds 1e6");
  if (!(dp.tol > 0.0)) throw std::invalid_argument("delta_symbol: tol must be positive");

  DeltaResult out;
  out.c_max = truncation_point(dp.kappa, m, n, 1.0, dp.tol);
  out.tail_bound = delta_tail_bound(dp.kappa, m, n, std::max<double>(out.c_max, 1.0));

  const double root = 4.0 * kPi * std::sqrt(static_cast<double>(m) * static_cast<double>(n));
  const auto mi = static_cast<std::int64_t>(m);
  const auto ni = static_cast<std::int64_t>(n);
  const double sum = sum_over_moduli(dp.q, out.c_max, dp.workers, [&](std::uint64_t c) {
    const double cd = static_cast<double>(c);
    return arith::kloosterman(mi, ni, c) / cd * bessel_j(dp.kappa - 1, root / cd);
  });
  const double i_kappa = (dp.kappa / 2) % 2 == 0 ? 1.0 : -1.0;
  out.value = (m == n ? 1.0 : 0.0) + 2.0 * kPi * i_kappa * sum;
  return out;
}

double delta_symbol(const DeltaParams& dp, std::uint64_t m, std::uint64_t n) {
  return delta_symbol_detailed(dp, m, n).value;
}

// ---------------------------------------------------------------- tau oracle

TauTable::TauTable(int max_n) {
  if (max_n < 1 || max_n > 10000)
    throw std::invalid_argument("TauTable: max_n must lie in [1, 10000], got " + std::to_string(max_n));
  const std::size_t degree = static_cast<std::size_t>(max_n) - 1;
  // prod (1 - x^k) = sum_k (-1)^k x^{k(3k-1)/2} over all integers k
  Poly euler(degree + 1, 0);
  euler[0] = 1;
  for (long k = 1;; ++k) {
    const auto g1 = static_cast<std::size_t>(k * (3 * k - 1) / 2);
    const auto g2 = static_cast<std::size_t>(k * (3 * k + 1) / 2);
    if (g1 > degree) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    euler[g1] += sign;
    if (g2 <= degree) euler[g2] += sign;
  }
  const Poly p2 = multiply_truncated(euler, euler, degree);
  const Poly p4 = multiply_truncated(p2, p2, degree);
  const Poly p8 = multiply_truncated(p4, p4, degree);
  const Poly p16 = multiply_truncated(p8, p8, degree);
  const Poly p24 = multiply_truncated(p16, p8, degree);
  tau_.assign(static_cast<std::size_t>(max_n) + 1, BigInt(0));
  for (std::size_t i = 0; i <= degree; ++i) tau_[i + 1] = to_big(p24[i]);
}

const BigInt& TauTable::tau(int n) const {
  if (n < 1 || n > max_n())
    throw std::out_of_range("TauTable: index " + std::to_string(n) + " outside [1, " +
                            std::to_string(max_n()) + "]");
  return tau_[static_cast<std::size_t>(n)];
}

double TauTable::normalized(int n) const { return tau_normalized_from(tau(n), n); }

BigInt ramanujan_tau(int n) {
  if (n < 1) throw std::invalid_argument("ramanujan_tau: n must be >= 1");
  return TauTable(n).tau(n);
}

chebyshev::HeckeSystem tau_hecke_system(int max_p) {
  const TauTable table(std::max(max_p, 2));
  chebyshev::HeckeSystem sys;
  for (std::uint64_t p : arith::primes_up_to(static_cast<std::uint64_t>(table.max_n())))
    sys.prime_values[p] = table.normalized(static_cast<int>(p));
  return sys;
}

int cusp_space_dimension(int kappa) {
  if (kappa < 12 || kappa % 2 != 0) return 0;
  return kappa % 12 == 2 ? kappa / 12 - 1 : kappa / 12;
}

// ---------------------------------------------------------------- Petersson checks

PeterssonReport petersson_ratio_suite(int kappa, int n_max, double tol, int workers) {
  if (kappa != 10 && kappa != 12)
    throw std::invalid_argument("petersson_ratio_suite: weight must be 10 or 12, got " + std::to_string(kappa));
  if (n_max < 1 || n_max > 30)
    throw std::invalid_argument("petersson_ratio_suite: n_max must lie in [1, 30]");
  constexpr double kCheck = 1e-6;

  PeterssonReport rep;
  rep.kappa = kappa;
  rep.n_max = n_max;
  const DeltaParams dp{1, kappa, tol, workers};
  const auto record = [&](std::uint64_t m, std::uint64_t n, double value, double expected) {
    PeterssonCheck c{m, n, value, expected, std::abs(value - expected), false};
    c.pass = c.deviation < kCheck;
    rep.max_deviation = std::max(rep.max_deviation, c.deviation);
    if (!c.pass) {
      rep.pass = false;
      rep.failures.push_back("(" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
    rep.checks.push_back(c);
  };

  const auto N = static_cast<std::uint64_t>(n_max);
  if (kappa == 10) {
    for (std::uint64_t m = 1; m <= N; ++m)
      for (std::uint64_t n = m; n <= N; ++n) record(m, n, delta_symbol(dp, m, n), 0.0);
    return rep;
  }

  const TauTable table(n_max);
  std::vector<double> column(N + 1, 0.0);  // Delta_1(n, 1)
  for (std::uint64_t n = 1; n <= N; ++n) column[n] = delta_symbol(dp, n, 1);
  const double d11 = column[1];
  for (std::uint64_t n = 1; n <= N; ++n)
    record(n, 1, column[n] / d11, table.normalized(static_cast<int>(n)));
  for (std::uint64_t m = 2; m <= N; ++m)
    for (std::uint64_t n = m; n <= N; ++n)
      record(m, n, delta_symbol(dp, m, n) * d11, column[m] * column[n]);
  return rep;
}

// ---------------------------------------------------------------- prime sums

PrimeSumResult prime_sum_first(const PrimeSumParams& pp, const TestFunction& tf, PrimeSumMode mode) {
  check_prime_sum_params(pp, tf, "prime_sum_first");
  return averaged_prime_sum(pp, pp.r, weighted_primes(pp, tf, 1.0, 0.5), mode);
}

PrimeSumResult prime_sum_second(const PrimeSumParams& pp, int m, const TestFunction& tf, EigenSource source,
                                const std::optional<chebyshev::HeckeSystem>& system, PrimeSumMode mode) {
  check_prime_sum_params(pp, tf, "prime_sum_second");
  if (m < 0 || m >= pp.r)
    throw std::invalid_argument("prime_sum_second: m must lie in [0, r-1], got " + std::to_string(m));
  const int k = 2 * (pp.r - m);
  const auto ws = weighted_primes(pp, tf, 2.0, 1.0);
  if (source == EigenSource::DeltaAverage) return averaged_prime_sum(pp, k, ws, mode);

  if (!system) throw std::invalid_argument("prime_sum_second: Hecke source needs a HeckeSystem");
  const double L = pp.r * std::log(static_cast<double>(pp.q));
  PrimeSumResult out;
  out.primes = ws.size();
  double s = 0.0;
  for (const auto& [p, w] : ws) s += chebyshev::chebyshev_eval(k, chebyshev::hecke_extend(*system, p)) * w;
  out.value = -2.0 / L * s;
  return out;
}

AlternatingForms prime_sum_second_alternating(const PrimeSumParams& pp, const TestFunction& tf,
                                              const chebyshev::HeckeSystem& system) {
  AlternatingForms out;
  for (int m = 0; m < pp.r; ++m) {
    const double v = prime_sum_second(pp, m, tf, EigenSource::Hecke, system).value;
    out.by_m += (m % 2 == 0 ? 1.0 : -1.0) * v;
  }
  const double L = pp.r * std::log(static_cast<double>(pp.q));
  const auto ws = weighted_primes(pp, tf, 2.0, 1.0);
  double s = 0.0;
  for (int j = 1; j <= pp.r; ++j) {
    double inner = 0.0;
    for (const auto& [p, w] : ws)
      inner += chebyshev::chebyshev_eval(2 * j, chebyshev::hecke_extend(system, p)) * w;
    s += ((pp.r - j) % 2 == 0 ? 1.0 : -1.0) * inner;
  }
  out.by_j = -2.0 / L * s;
  return out;
}

// ---------------------------------------------------------------- large sieve monitor

std::vector<std::uint64_t> primes_avoiding(std::size_t count, std::uint64_t q) {
  std::vector<std::uint64_t> out;
  std::uint64_t bound = 64;
  while (out.size() < count) {
    out.clear();
    for (std::uint64_t p : arith::primes_up_to(bound)) {
      if (p == q) continue;
      out.push_back(p);
      if (out.size() == count) break;
    }
    bound *= 2;
  }
  return out;
}

SieveRecord sieve_form_monitor(const SieveParams& sp, std::span<const double> a, std::span<const double> b,
                               const TestFunction& tf) {
  check_kappa(sp.kappa, "sieve_form_monitor");
  if (sp.q < 2 || !arith::is_prime(sp.q))
    throw std::invalid_argument("sieve_form_monitor: q must be prime, got " + std::to_string(sp.q));
  if (a.size() > 1000 || b.size() > 1000)
    throw std::invalid_argument("sieve_form_monitor: at most 1000 coefficients per sequence");
  if (sp.k1 < 1 || sp.k2 < 1) throw std::invalid_argument("sieve_form_monitor: k1, k2 must be >= 1");
  if (sp.sign != 1 && sp.sign != -1) throw std::invalid_argument("sieve_form_monitor: sign must be +1 or -1");

  const double lq = std::log(static_cast<double>(sp.q));
  const auto pa = primes_avoiding(a.size(), sp.q);
  const auto pb = primes_avoiding(b.size(), sp.q);
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 40;

  struct Term {
    std::uint64_t index;
    double coeff;  // a_i hat(log p_i / log q)
  };
  const auto active = [&](std::span<const double> seq, const std::vector<std::uint64_t>& primes, int k) {
    std::vector<Term> out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const double h = tf.phi_hat(std::log(static_cast<double>(primes[i])) / lq);
      if (seq[i] == 0.0 || h == 0.0) continue;
      const std::uint64_t idx = checked_power(primes[i], k, kLimit);
      if (idx > kLimit) throw std::invalid_argument("sieve_form_monitor: index p^k too large");
      out.push_back({idx, seq[i] * h});
    }
    return out;
  };
  const auto ta = active(a, pa, sp.k1);
  const auto tb = active(b, pb, sp.k2);

  SieveRecord rec;
  const auto norm = [](std::span<const double> v) {
    return std::sqrt(std::inner_product(v.begin(), v.end(), v.begin(), 0.0));
  };
  double M = 1.0, N = 1.0;
  for (const auto& t : ta) M = std::max(M, static_cast<double>(t.index));
  for (const auto& t : tb) N = std::max(N, static_cast<double>(t.index));
  const double q = static_cast<double>(sp.q);
  rec.M = M;
  rec.N = N;
  rec.C = std::max(q, std::sqrt(M * N));
  rec.rhs_envelope = std::pow(rec.C * rec.C / (M * N), sp.theta) * std::sqrt(1.0 + M / q) *
                     std::sqrt(1.0 + N / q) * norm(a) * norm(b);

  if (ta.empty() || tb.empty()) return rec;

  // Common truncation: the weighted tail bound over every pair must fit in tol.
  std::uint64_t c_max = 0;
  const auto tail_at = [&](double C) {
    double t = 0.0;
    for (const auto& x : ta)
      for (const auto& y : tb)
        t += std::abs(x.coeff * y.coeff) * delta_tail_bound(sp.kappa, x.index, y.index, C) / (2.0 * kPi);
    return t;
  };
  for (double C = 1.0;; C *= 2.0) {
    if (C > static_cast<double>(kMaxModulus))
      throw std::runtime_error("sieve_form_monitor: c-sum does not reach tolerance below 1e7");
    if (tail_at(C) < sp.tol) {
      c_max = static_cast<std::uint64_t>(C);
      break;
    }
  }
  rec.c_max = c_max;
  rec.tail_bound = tail_at(static_cast<double>(c_max));

  const double max_arg = 4.0 * kPi * std::sqrt(M * N) / q;
  if (max_arg > 1e6) throw std::invalid_argument("sieve_form_monitor: Bessel argument exceeds 1e6");

  rec.lhs = sum_over_moduli(sp.q, c_max, 1, [&](std::uint64_t c) {
    const double cd = static_cast<double>(c);
    double s = 0.0;
    for (const auto& x : ta) {
      for (const auto& y : tb) {
        const double mn = static_cast<double>(x.index) * static_cast<double>(y.index);
        const double kl = arith::kloosterman(static_cast<std::int64_t>(x.index),
                                             sp.sign * static_cast<std::int64_t>(y.index), c);
        s += x.coeff * y.coeff * kl / cd * bessel_j(sp.kappa - 1, 4.0 * kPi * std::sqrt(mn) / cd);
      }
    }
    return s;
  });
  rec.ratio = rec.rhs_envelope > 0.0 ? std::abs(rec.lhs) / rec.rhs_envelope : 0.0;
  return rec;
}

}  // namespace lowlying
