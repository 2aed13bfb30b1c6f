#pragma once

#include <span>
#include <string>

namespace lowlying {

/// Concrete even test functions whose Fourier transform is supported in
/// [-nu, nu]. Fourier transform convention: hat(f)(u) = int f(x) e(-x u) dx.
///
///   Fejer:          hat(u) = max(0, 1 - |u|/nu),  phi(x) = nu (sin(pi nu x)/(pi nu x))^2
///   CosineSquared:  hat(u) = cos^2(pi u / (2 nu)) on [-nu, nu]
enum class Family { Fejer, CosineSquared };

enum class Side { Direct, Fourier };

class TestFunction {
 public:
  // Throws std::invalid_argument unless nu > 0.
  TestFunction(Family family, double nu);

  static TestFunction fejer(double nu) { return {Family::Fejer, nu}; }
  static TestFunction cosine_squared(double nu) { return {Family::CosineSquared, nu}; }

  [[nodiscard]] Family family() const { return family_; }
  [[nodiscard]] double nu() const { return nu_; }
  [[nodiscard]] std::string name() const;

  [[nodiscard]] double phi(double x) const;
  [[nodiscard]] double phi_hat(double u) const;
  [[nodiscard]] double evaluate(Side side, double t) const {
    return side == Side::Direct ? phi(t) : phi_hat(t);
  }

  // 2 int_0^nu hat(u) cos(2 pi x u) du by Gauss-Legendre, panel count scaled
  // with the number of oscillations nu|x|.
  [[nodiscard]] double phi_by_inversion(double x) const;

  // Leading asymptotics of int_{|x| > X} phi(x) dx, for X >= 10/nu.
  [[nodiscard]] double tail_mass(double X) const;

 private:
  Family family_;
  double nu_;
};

Family parse_family(const std::string& name);
std::string to_string(Family family);

struct PairIntegrals {
  double phihat1_0 = 0.0;
  double phihat2_0 = 0.0;
  double phi1_0 = 0.0;
  double phi2_0 = 0.0;
  double sigma12 = 0.0;   // 2 int |u| hat1(u) hat2(u) du
  double prodhat0 = 0.0;  // int phi1 phi2 dx = int hat1(u) hat2(u) du
};

PairIntegrals pair_integrals(const TestFunction& tf1, const TestFunction& tf2);

// max over grid of |phi(x) - phi_by_inversion(x)|. Grid points must lie in [-20, 20].
double fourier_pair_check(const TestFunction& tf, std::span<const double> grid);

// int phi1(x) phi2(x) dx over the real line by direct-space quadrature on
// [-X, X]; used to cross-check prodhat0.
double direct_product_integral(const TestFunction& tf1, const TestFunction& tf2,
                               double X = 2000.0);

}  // namespace lowlying
