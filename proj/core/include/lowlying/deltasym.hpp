#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lowlying/chebyshev.hpp"
#include "lowlying/testfn.hpp"

namespace lowlying {

// ---------------------------------------------------------------- Bessel

/// J_n(x) for integer n >= 0 and 0 <= x <= 1e6, absolute accuracy 1e-10.
/// Uses the ascending series for x <= n + 20 and the integral representation
/// otherwise.
double bessel_j(int order, double x);

// sum_k (-1)^k (x/2)^{2k+n} / (k! (k+n)!), accumulated in quad precision.
double bessel_j_series(int order, double x);

// (1/pi) int_0^pi cos(n t - x sin t) dt by the trapezoid rule on a full
// period, which converges geometrically once the node count exceeds n + x.
double bessel_j_integral(int order, double x);

// ---------------------------------------------------------------- Delta symbol

struct DeltaParams {
  std::uint64_t q = 1;  // 1 or a prime
  int kappa = 12;       // even, >= 4
  double tol = 1e-8;    // absolute budget for the truncated c-sum
  int workers = 1;
};

inline constexpr std::uint64_t kMaxModulus = 10'000'000;
inline constexpr std::uint64_t kMaxDeltaProduct = 1'000'000;

struct DeltaResult {
  double value = 0.0;
  std::uint64_t c_max = 0;  // cutoff: moduli q | c <= c_max were summed (none if c_max < q)
  double tail_bound = 0.0;  // certified bound on the omitted moduli
};

/// Upper bound on sum_{c > C} |S(m,n;c)| / c |J_{k-1}(4 pi sqrt(mn) / c)| from
/// |S| <= tau(c) sqrt(gcd(m,n) c), tau(c) <= 2 sqrt(c) and
/// |J_{k-1}(y)| <= (y/2)^{k-1} / (k-1)!, times the 2 pi prefactor.
double delta_tail_bound(int kappa, std::uint64_t m, std::uint64_t n, double C);

/// delta_{m,n} + 2 pi (-1)^{kappa/2} sum_{q | c <= C} S(m,n;c)/c J_{kappa-1}(4 pi sqrt(mn)/c)
/// with C the smallest modulus whose tail bound is below tol. Throws
/// std::invalid_argument on bad parameters or m n > 1e6, and
/// std::runtime_error if the budget needs C > 1e7.
DeltaResult delta_symbol_detailed(const DeltaParams& dp, std::uint64_t m, std::uint64_t n);
double delta_symbol(const DeltaParams& dp, std::uint64_t m, std::uint64_t n);

// ---------------------------------------------------------------- tau oracle

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of x prod_{k>=1} (1 - x^k)^24 up to x^max_n, as exact
/// integers from the pentagonal expansion raised to the 24th power.
class TauTable {
 public:
  // Throws std::invalid_argument unless 1 <= max_n <= 10^4.
  explicit TauTable(int max_n);

  [[nodiscard]] int max_n() const { return static_cast<int>(tau_.size()) - 1; }
  [[nodiscard]] const BigInt& tau(int n) const;
  // tau(n) / n^{11/2}
  [[nodiscard]] double normalized(int n) const;

 private:
  std::vector<BigInt> tau_;
};

BigInt ramanujan_tau(int n);

// Hecke system of the weight 12 level 1 form, lambda(p) = tau(p)/p^{11/2} for p <= max_p.
chebyshev::HeckeSystem tau_hecke_system(int max_p);

// Dimension of the weight-kappa level-1 cusp space.
int cusp_space_dimension(int kappa);

// ---------------------------------------------------------------- Petersson checks

struct PeterssonCheck {
  std::uint64_t m = 0;
  std::uint64_t n = 0;
  double value = 0.0;
  double expected = 0.0;
  double deviation = 0.0;
  bool pass = false;
};

struct PeterssonReport {
  int kappa = 0;
  int n_max = 0;
  double max_deviation = 0.0;
  bool pass = true;
  std::vector<PeterssonCheck> checks;  // every entry checked
  std::vector<std::string> failures;   // "(m,n)" of failed entries
};

/// kappa = 10: Delta_1(m,n) = 0 for all m, n <= n_max.
/// kappa = 12: Delta_1(n,1)/Delta_1(1,1) = tau(n)/n^{11/2} for n <= n_max, and
///             Delta_1(m,n) Delta_1(1,1) = Delta_1(m,1) Delta_1(n,1) for coprime m, n.
/// Tolerance 1e-6 throughout. Throws std::invalid_argument for other kappa or n_max > 30.
PeterssonReport petersson_ratio_suite(int kappa, int n_max, double tol = 1e-8, int workers = 1);

// ---------------------------------------------------------------- prime sums

enum class PrimeSumMode { New, Old, HarmonicAverage };

struct PrimeSumParams {
  std::uint64_t q = 11;  // prime
  int kappa = 12;
  int r = 1;
  double tol = 1e-8;
  int workers = 1;
};

struct PrimeSumResult {
  double value = 0.0;
  double truncation = 0.0;  // bound on what the truncations left out
  std::size_t primes = 0;   // primes with a nonzero weight
};

inline constexpr double kMaxPrimeRange = 1e6;

/// First prime sum averaged against the harmonic weights.
///   new: -2/log(q^r) sum_{p != q} Delta_q(p^r,1) log p / sqrt(p) hat(log p / log q^r)
///   old: 2/(q log q^r) sum_{l | q^inf} 1/l sum_{p != q} Delta_1(p^r l^2,1) log p / sqrt(p) hat(...)
/// The l-sum stops once the remaining terms are bounded by tol (via
/// |Delta_1(n,1)| <= d(n) Delta_1(1,1)) or when p^r l^2 would exceed 1e6;
/// the achieved bound is returned in `truncation`. Throws std::invalid_argument
/// if q^{r nu} > 1e6 or q is not prime.
PrimeSumResult prime_sum_first(const PrimeSumParams& pp, const TestFunction& tf, PrimeSumMode mode);

enum class EigenSource { Hecke, DeltaAverage };

/// Second prime sum for 0 <= m <= r-1:
///   -2/log(q^r) sum_{p != q} lambda(p^{2(r-m)}) log p / p hat(2 log p / log q^r).
/// With EigenSource::Hecke, lambda comes from `system` (required); with
/// DeltaAverage, lambda(p^k) is replaced by the harmonic average of `mode`.
PrimeSumResult prime_sum_second(const PrimeSumParams& pp, int m, const TestFunction& tf,
                                EigenSource source,
                                const std::optional<chebyshev::HeckeSystem>& system = std::nullopt,
                                PrimeSumMode mode = PrimeSumMode::HarmonicAverage);

/// The same alternating combination written two ways:
///   sum_{m=0}^{r-1} (-1)^m P2[m]   and
///   -2/log(q^r) sum_{j=1}^{r} (-1)^{r-j} sum_p lambda(p^{2j}) log p / p hat(2 log p / log q^r).
struct AlternatingForms {
  double by_m = 0.0;
  double by_j = 0.0;
};
AlternatingForms prime_sum_second_alternating(const PrimeSumParams& pp, const TestFunction& tf,
                                              const chebyshev::HeckeSystem& system);

// ---------------------------------------------------------------- large sieve monitor

struct SieveParams {
  std::uint64_t q = 101;
  int k1 = 1;
  int k2 = 1;
  int kappa = 12;
  int sign = 1;              // S(m, sign * n; c)
  double theta = 7.0 / 64.0;
  double tol = 1e-10;
};

struct SieveRecord {
  double lhs = 0.0;
  double rhs_envelope = 0.0;
  double ratio = 0.0;
  double M = 0.0;
  double N = 0.0;
  double C = 0.0;
  std::uint64_t c_max = 0;
  double tail_bound = 0.0;
};

/// The bilinear form
///   sum_{q | c} sum_{i,j} a_i b_j S(p_i^{k1}, +-p_j^{k2}; c)/c J_{kappa-1}(4 pi sqrt(mn)/c)
///     hat(log p_i / log q) hat(log p_j / log q)
/// over the first primes p_i != q, against the envelope
/// (C^2/MN)^theta (1 + M/q)^{1/2} (1 + N/q)^{1/2} |a| |b| with C = max(q, sqrt(MN)).
/// Only reports; the implied constant is unknown. Sequences of at most 1000 entries.
SieveRecord sieve_form_monitor(const SieveParams& sp, std::span<const double> a,
                               std::span<const double> b, const TestFunction& tf);

// First `count` primes different from q.
std::vector<std::uint64_t> primes_avoiding(std::size_t count, std::uint64_t q);

}  // namespace lowlying
