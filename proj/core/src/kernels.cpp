#include "lowlying/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lowlying/quadrature.hpp"

namespace lowlying {

namespace {

constexpr double kPi = std::numbers::pi;

// sin(2 pi x) / (2 pi x)
double sinc2pi(double x) {
  const double y = 2.0 * kPi * x;
  if (std::abs(y) < 1e-4) return 1.0 - y * y / 6.0;
  return std::sin(y) / y;
}

double odd_double_factorial(int m) {
  double result = 1.0;
  for (int k = m - 1; k > 1; k -= 2) result *= k;
  return result;
}

void require_sign(int r, std::optional<int> sign, const char* who) {
  if (!sign) return;
  if (*sign != 1 && *sign != -1)
    throw std::invalid_argument(std::string(who) + ": sign must be +1 or -1");
  if (r % 2 == 0)
    throw std::invalid_argument(std::string(who) + ": signed families need odd r, got r=" +
                                std::to_string(r));
}

}  // namespace

std::string to_string(SymmetryClass cls) {
  switch (cls) {
    case SymmetryClass::SOeven: return "SOeven";
    case SymmetryClass::O: return "O";
    case SymmetryClass::SOodd: return "SOodd";
    case SymmetryClass::Sp: return "Sp";
  }
  return "?";
}

SymmetryClass parse_symmetry_class(const std::string& name) {
  if (name == "SOeven" || name == "so-even" || name == "soeven") return SymmetryClass::SOeven;
  if (name == "O" || name == "o") return SymmetryClass::O;
  if (name == "SOodd" || name == "so-odd" || name == "soodd") return SymmetryClass::SOodd;
  if (name == "Sp" || name == "sp" || name == "usp") return SymmetryClass::Sp;
  throw std::invalid_argument("unknown symmetry class '" + name + "'");
}

double eta(double x) {
  const double a = std::abs(x);
  if (a < 1.0) return 1.0;
  if (a == 1.0) return 0.5;
  return 0.0;
}

KernelValue w1(SymmetryClass cls, double x, Side space) {
  if (space == Side::Direct) {
    switch (cls) {
      case SymmetryClass::SOeven: return {1.0 + sinc2pi(x), 0.0};
      case SymmetryClass::O: return {1.0, 0.5};
      case SymmetryClass::SOodd: return {1.0 - sinc2pi(x), 1.0};
      case SymmetryClass::Sp: return {1.0 - sinc2pi(x), 0.0};
    }
  } else {
    switch (cls) {
      case SymmetryClass::SOeven: return {0.5 * eta(x), 1.0};
      case SymmetryClass::O: return {0.5, 1.0};
      case SymmetryClass::SOodd: return {1.0 - 0.5 * eta(x), 1.0};
      case SymmetryClass::Sp: return {-0.5 * eta(x), 1.0};
    }
  }
  return {};
}

double predicted_one_level(int r, const TestFunction& tf) {
  const double sgn = (r % 2 == 1) ? 1.0 : -1.0;  // (-1)^{r+1}
  return tf.phi_hat(0.0) + sgn * tf.phi(0.0) / 2.0;
}

double predicted_two_level(int r, std::optional<int> sign, const TestFunction& tf1,
                           const TestFunction& tf2) {
  require_sign(r, sign, "predicted_two_level");
  const PairIntegrals pi = pair_integrals(tf1, tf2);
  const double cross = pi.sigma12 - 2.0 * pi.prodhat0;
  const double phi00 = pi.phi1_0 * pi.phi2_0;
  if (!sign) {
    const bool odd = r % 2 == 1;
    const double sgn = odd ? 1.0 : -1.0;  // (-1)^{r+1}
    const double e1 = pi.phihat1_0 + sgn * pi.phi1_0 / 2.0;
    const double e2 = pi.phihat2_0 + sgn * pi.phi2_0 / 2.0;
    const double coeff = -sgn + (odd ? 0.5 : 0.0);  // (-1)^r + 1_{r odd}/2
    return e1 * e2 + cross + coeff * phi00;
  }
  const double e1 = pi.phihat1_0 + pi.phi1_0 / 2.0;
  const double e2 = pi.phihat2_0 + pi.phi2_0 / 2.0;
  return e1 * e2 + cross - phi00 + (*sign == -1 ? phi00 : 0.0);
}

double predicted_variance(const TestFunction& tf) { return pair_integrals(tf, tf).sigma12; }

double predicted_moment(int m, const TestFunction& tf) {
  if (m < 1) throw std::invalid_argument("predicted_moment: m must be >= 1");
  if (m % 2 == 1) return 0.0;
  return std::pow(predicted_variance(tf), m / 2) * odd_double_factorial(m);
}

double predicted_moment_literal(int m, const TestFunction& tf) {
  if (m < 1) throw std::invalid_argument("predicted_moment_literal: m must be >= 1");
  if (m % 2 == 1) return 0.0;
  return predicted_variance(tf) * odd_double_factorial(m);
}

int epsilon_kappa_r(int kappa, int r) {
  if (kappa % 2 != 0) throw std::invalid_argument("epsilon_kappa_r: weight must be even");
  if (r % 2 == 0) throw std::invalid_argument("epsilon_kappa_r: r must be odd");
  const int i_kappa = (kappa % 4 == 0) ? 1 : -1;  // i^kappa for even kappa
  switch (r % 8) {
    case 1: return i_kappa;
    case 3: return -1;
    case 5: return -i_kappa;
    default: return 1;  // r = 7 mod 8
  }
}

int sign_functional_equation(const SignData& sd) {
  if (sd.kappa % 2 != 0)
    throw std::invalid_argument("sign_functional_equation: odd weight " + std::to_string(sd.kappa));
  if (sd.r < 1) throw std::invalid_argument("sign_functional_equation: r must be >= 1");
  if (sd.eps_f_q != 1 && sd.eps_f_q != -1)
    throw std::invalid_argument("sign_functional_equation: eps_f_q must be +1 or -1");
  if (sd.r % 2 == 0) return 1;
  return sd.eps_f_q * epsilon_kappa_r(sd.kappa, sd.r);
}

double SupportBounds::moment_bound(int m) const {
  if (m < 1) throw std::invalid_argument("moment_bound: m must be >= 1");
  return 4.0 / (static_cast<double>(m) * r * (r + 2));
}

SupportBounds support_bounds(const SupportBoundParams& p) {
  if (p.r < 1) throw std::invalid_argument("support_bounds: r must be >= 1");
  const double r = p.r;
  SupportBounds b;
  b.r = p.r;
  b.nu1max = (1.0 - 1.0 / (2.0 * (p.kappa - 2.0 * p.theta))) * 2.0 / (r * r);
  b.nu1max_signed = std::min(b.nu1max, 3.0 / (r * (r + 2.0)));
  b.nu2max_unsigned = 1.0 / (r * r);
  b.nu2max_signed_C = 1.0 / (2.0 * r * (r + 2.0));
  b.nu2max_signed_thm = 1.0 / (2.0 * r * (r + 1.0));
  return b;
}

SymmetryClass symmetry_type(int r, std::optional<int> sign) {
  if (r < 1) throw std::invalid_argument("symmetry_type: r must be >= 1");
  require_sign(r, sign, "symmetry_type");
  if (r % 2 == 0) return SymmetryClass::Sp;
  if (!sign) return SymmetryClass::O;
  return *sign == 1 ? SymmetryClass::SOeven : SymmetryClass::SOodd;
}

double zero_count_main(double T, double q, int r) {
  if (T < 1.0) throw std::invalid_argument("zero_count_main: T must be >= 1");
  const double rr = r;
  return T / kPi *
         (rr * std::log(q) + (rr + 1.0) * std::log(T) - (rr + 1.0) * std::log(2.0 * kPi * std::numbers::e));
}

double mean_spacing(double q, int r) { return 2.0 * kPi / (r * std::log(q)); }

PlancherelPair plancherel_integral(SymmetryClass cls, const TestFunction& tf) {
  PlancherelPair out;

  // Direct side: phi is even, integrate on [0, X] and double.
  constexpr double X = 2000.0;
  const int panels = static_cast<int>(std::ceil(X * std::max(2.0, 4.0 * tf.nu())));
  const auto direct_smooth = [&](double x) { return tf.phi(x) * w1(cls, x, Side::Direct).smooth; };
  const double bulk = 2.0 * integrate_panels(direct_smooth, 0.0, X, panels);
  // Beyond X every smooth kernel is 1 + O(1/x), so the tail is the mass of phi.
  const double tail = tf.tail_mass(X);
  out.direct = bulk + tail + w1(cls, 0.0, Side::Direct).delta_coefficient * tf.phi(0.0);

  // Fourier side: split at the eta jump |u| = 1.
  const auto fourier_smooth = [&](double u) {
    return tf.phi_hat(u) * w1(cls, u, Side::Fourier).smooth;
  };
  const double nu = tf.nu();
  double integral = 2.0 * integrate_panels(fourier_smooth, 0.0, std::min(nu, 1.0), 16);
  if (nu > 1.0) integral += 2.0 * integrate_panels(fourier_smooth, 1.0, nu, 16);
  out.fourier = integral + w1(cls, 0.0, Side::Fourier).delta_coefficient * tf.phi_hat(0.0);
  return out;
}

}  // namespace lowlying
