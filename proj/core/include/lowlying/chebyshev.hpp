#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lowlying::chebyshev {

using BigInt = boost::multiprecision::cpp_int;

/// X_r(x) by the three-term recurrence X_0 = 1, X_1 = x, X_{k+1} = x X_k - X_{k-1}.
/// X_r(2 cos t) = sin((r+1) t) / sin t.
double chebyshev_eval(int r, double x);

/// Hecke eigenvalues from their values at primes.
///
/// Away from the level, lambda(p^k) = X_k(a_p) and lambda is multiplicative.
/// At the level prime q the caller may supply lambda(q); then
/// lambda(q^k) = lambda(q)^k.
struct HeckeSystem {
  std::map<std::uint64_t, double> prime_values;
  std::uint64_t level = 1;
  std::optional<double> level_value;
};

// Throws std::out_of_range naming the first prime of n without a value.
double hecke_extend(const HeckeSystem& sys, std::uint64_t n);

/// Exact coefficients of X_r^varpi = sum_j coeffs[j] X_j, j = 0..r*varpi.
struct LinearizationTable {
  int varpi = 0;
  int r = 0;
  std::vector<BigInt> coeffs;

  [[nodiscard]] const BigInt& at(int j) const;
};

inline constexpr int kMaxLinearizationDegree = 10000;

// Throws std::invalid_argument when r * varpi exceeds kMaxLinearizationDegree.
LinearizationTable linearization_table(int varpi, int r);

/// (2/pi) int_0^pi X_r(2cos t)^varpi X_j(2cos t) sin^2 t dt, which is the
/// inner product <X_r^varpi, X_j> with the sine denominators cancelled.
/// Composite Gauss-Legendre, 64 nodes on each of 8 panels.
double linearization_quadrature(int varpi, int r, int j);

}  // namespace lowlying::chebyshev
