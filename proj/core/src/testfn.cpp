#include "lowlying/testfn.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "lowlying/quadrature.hpp"

namespace lowlying {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double y) {
  if (std::abs(y) < 1e-4) return 1.0 - y * y / 6.0;
  return std::sin(y) / y;
}

}  // namespace

TestFunction::TestFunction(Family family, double nu) : family_(family), nu_(nu) {
  if (!(nu > 0.0) || !std::isfinite(nu))
    throw std::invalid_argument("TestFunction: nu must be positive and finite");
}

std::string TestFunction::name() const {
  std::ostringstream os;
  os << to_string(family_) << '(' << nu_ << ')';
  return os.str();
}

double TestFunction::phi_hat(double u) const {
  const double a = std::abs(u);
  if (a >= nu_) return 0.0;
  switch (family_) {
    case Family::Fejer:
      return 1.0 - a / nu_;
    case Family::CosineSquared: {
      const double c = std::cos(kPi * a / (2.0 * nu_));
      return c * c;
    }
  }
  return 0.0;
}

double TestFunction::phi(double x) const {
  x = std::abs(x);
  switch (family_) {
    case Family::Fejer: {
      const double s = sinc(kPi * nu_ * x);
      return nu_ * s * s;
    }
    case Family::CosineSquared: {
      // phi(x) = sin(2 pi nu x) a^2 / (b (a^2 - b^2)), a = pi/nu, b = 2 pi x,
      // with removable singularities at b = 0 and b = a.
      const double a = kPi / nu_;
      const double b = 2.0 * kPi * x;
      if (b < 1e-4 * a || std::abs(a - b) < 1e-4 * a) return phi_by_inversion(x);
      return std::sin(2.0 * kPi * nu_ * x) * a * a / (b * (a * a - b * b));
    }
  }
  return 0.0;
}

double TestFunction::phi_by_inversion(double x) const {
  const int panels = 4 + static_cast<int>(std::ceil(2.0 * nu_ * std::abs(x)));
  const auto integrand = [&](double u) { return phi_hat(u) * std::cos(2.0 * kPi * x * u); };
  return 2.0 * integrate_panels(integrand, 0.0, nu_, panels);
}

double TestFunction::tail_mass(double X) const {
  const double k = 2.0 * kPi * nu_;
  switch (family_) {
    case Family::Fejer: {
      // phi = (1 - cos(kx)) / (2 pi^2 nu x^2); integrate by parts twice.
      const double c = 1.0 / (2.0 * kPi * kPi * nu_);
      const double one_side =
          c * (1.0 / X + std::sin(k * X) / (k * X * X) - 2.0 * std::cos(k * X) / (k * k * X * X * X));
      return 2.0 * one_side;
    }
    case Family::CosineSquared: {
      // phi ~ -a^2 sin(kx) / (2 pi x)^3 for large x.
      const double a = kPi / nu_;
      const double one_side = -a * a / (8.0 * kPi * kPi * kPi) * std::cos(k * X) / (k * X * X * X);
      return 2.0 * one_side;
    }
  }
  return 0.0;
}

Family parse_family(const std::string& name) {
  if (name == "fejer" || name == "Fejer") return Family::Fejer;
  if (name == "cos2" || name == "cosine-squared" || name == "CosineSquared")
    return Family::CosineSquared;
  throw std::invalid_argument("unknown test-function family '" + name + "'");
}

std::string to_string(Family family) {
  return family == Family::Fejer ? "fejer" : "cosine-squared";
}

PairIntegrals pair_integrals(const TestFunction& tf1, const TestFunction& tf2) {
  PairIntegrals out;
  out.phihat1_0 = tf1.phi_hat(0.0);
  out.phihat2_0 = tf2.phi_hat(0.0);
  out.phi1_0 = tf1.phi(0.0);
  out.phi2_0 = tf2.phi(0.0);
  const double support = std::min(tf1.nu(), tf2.nu());
  const auto prod = [&](double u) { return tf1.phi_hat(u) * tf2.phi_hat(u); };
  out.sigma12 = 4.0 * integrate_panels([&](double u) { return u * prod(u); }, 0.0, support, 16);
  out.prodhat0 = 2.0 * integrate_panels(prod, 0.0, support, 16);
  return out;
}

double fourier_pair_check(const TestFunction& tf, std::span<const double> grid) {
  double worst = 0.0;
  for (double x : grid) {
    if (std::abs(x) > 20.0) throw std::invalid_argument("fourier_pair_check: grid outside [-20, 20]");
    worst = std::max(worst, std::abs(tf.phi(x) - tf.phi_by_inversion(x)));
  }
  return worst;
}

double direct_product_integral(const TestFunction& tf1, const TestFunction& tf2, double X) {
  const auto f = [&](double x) { return tf1.phi(x) * tf2.phi(x); };
  const int panels = static_cast<int>(std::ceil(X * std::max(1.0, 2.0 * std::max(tf1.nu(), tf2.nu()))));
  return 2.0 * integrate_panels(f, 0.0, X, panels);
}

}  // namespace lowlying
