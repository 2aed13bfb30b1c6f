#pragma once

#include <optional>
#include <string>

#include "lowlying/testfn.hpp"

namespace lowlying {

enum class SymmetryClass { SOeven, O, SOodd, Sp };

std::string to_string(SymmetryClass cls);
SymmetryClass parse_symmetry_class(const std::string& name);

/// A one-level kernel value split into its smooth part and the coefficient of
/// the Dirac mass at 0, which is kept symbolic.
struct KernelValue {
  double smooth = 0.0;
  double delta_coefficient = 0.0;
};

// 1 for |x| < 1, 1/2 at |x| = 1, 0 beyond.
double eta(double x);

/// One-level density kernel of a classical compact group.
///   direct:  W1(SOeven) = 1 + sin(2 pi x)/(2 pi x)        W1(O) = 1 + delta/2
///            W1(SOodd)  = 1 - sin(2 pi x)/(2 pi x) + delta  W1(Sp) = 1 - sin(2 pi x)/(2 pi x)
///   fourier: hatW1(SOeven) = delta + eta/2   hatW1(O) = delta + 1/2
///            hatW1(SOodd)  = delta - eta/2 + 1   hatW1(Sp) = delta - eta/2
KernelValue w1(SymmetryClass cls, double x, Side space);

// hat(0) + (-1)^{r+1} phi(0) / 2
double predicted_one_level(int r, const TestFunction& tf);

/// Expected two-level density. With `sign` unset this is the full-family
/// value; with sign = +1 or -1 it is the value on the sub-family of that
/// root number, which requires odd r (std::invalid_argument otherwise).
double predicted_two_level(int r, std::optional<int> sign, const TestFunction& tf1,
                           const TestFunction& tf2);

// sigma^2 = 2 int |u| hat(u)^2 du
double predicted_variance(const TestFunction& tf);

/// Centered m-th moment of the one-level density under the Gaussian pairing:
/// 0 for odd m, sigma^m (m-1)!! for even m.
double predicted_moment(int m, const TestFunction& tf);

// Same with sigma^2 to the first power instead of the (m/2)-th: sigma^2 (m-1)!!.
double predicted_moment_literal(int m, const TestFunction& tf);

struct SignData {
  int kappa = 2;    // even weight
  int r = 1;        // symmetric power
  int eps_f_q = 1;  // root number of f, +1 or -1
};

// epsilon(kappa, r) from the r mod 8 table; kappa even, r odd.
int epsilon_kappa_r(int kappa, int r);

// +1 for even r, eps_f_q * epsilon(kappa, r) otherwise. Throws on odd kappa.
int sign_functional_equation(const SignData& sd);

struct SupportBoundParams {
  int r = 1;
  int kappa = 2;
  double theta = 7.0 / 64.0;
};

struct SupportBounds {
  int r = 1;
  double nu1max = 0.0;             // (1 - 1/(2(kappa - 2 theta))) 2/r^2
  double nu1max_signed = 0.0;      // min(nu1max, 3/(r(r+2)))
  double nu2max_unsigned = 0.0;    // 1/r^2
  double nu2max_signed_C = 0.0;    // 1/(2r(r+2))
  double nu2max_signed_thm = 0.0;  // 1/(2r(r+1))

  // 4/(m r (r+2)): largest support for which the m-th moment is mock-Gaussian.
  [[nodiscard]] double moment_bound(int m) const;
};

SupportBounds support_bounds(const SupportBoundParams& p);

// Sp for even r; for odd r, O unsigned, SOeven for sign +1 and SOodd for -1.
SymmetryClass symmetry_type(int r, std::optional<int> sign);

// (T/pi) log(q^r T^{r+1} / (2 pi e)^{r+1}), the main term of the zero count up to height T.
double zero_count_main(double T, double q, int r);

// 2 pi / log(q^r)
double mean_spacing(double q, int r);

struct PlancherelPair {
  double direct = 0.0;
  double fourier = 0.0;
};

/// int phi W1 computed on both sides of Plancherel. The direct side is a
/// quadrature over [-X, X] plus the analytic tail of phi; the fourier side
/// integrates over the compact support of hat(phi).
PlancherelPair plancherel_integral(SymmetryClass cls, const TestFunction& tf);

}  // namespace lowlying
