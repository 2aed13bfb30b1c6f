#include "lowlying/rmt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <thread>

namespace lowlying {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPairTolerance = 1e-6;

// Classical Gram-Schmidt, applied twice: one pass loses orthogonality in
// proportion to the condition number, the second restores it to rounding level.
template <typename Matrix, typename Vector>
void project_out(const Matrix& q, Eigen::Index count, Vector& v) {
  if (count == 0) return;
  const auto basis = q.leftCols(count);
  for (int pass = 0; pass < 2; ++pass) v.noalias() -= basis * (basis.adjoint() * v);
}

// Spectrum of U + U^*, ascending. The tridiagonal QR iteration sometimes fails
// to converge on this exactly doubled spectrum (about once in a few thousand
// draws at M = 200); then the eigenvalues lambda of U give it as 2 Re(lambda).
template <typename GeneralSolver, typename Matrix>
Eigen::VectorXd doubled_cosines(const Matrix& u) {
  const Matrix s = u + u.adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> symmetric(s, Eigen::EigenvaluesOnly);
  if (symmetric.info() == Eigen::Success) return symmetric.eigenvalues();
  GeneralSolver general(u, false);
  if (general.info() != Eigen::Success)
    throw std::runtime_error("eigenphases_to_zeros: eigenvalue iteration did not converge");
  Eigen::VectorXd out = 2.0 * general.eigenvalues().real();
  std::sort(out.begin(), out.end());
  return out;
}

// Positive-side angles from the doubled eigenvalues 2 cos(theta).
std::vector<double> paired_angles(const Eigen::VectorXd& ascending, bool drop_largest) {
  Eigen::Index n = ascending.size();
  if (drop_largest) {
    if (n == 0 || std::abs(ascending(n - 1) - 2.0) > kPairTolerance)
      throw std::runtime_error("eigenphases_to_zeros: odd orthogonal matrix without eigenvalue 1");
    --n;
  }
  if (n % 2 != 0) throw std::runtime_error("eigenphases_to_zeros: unpaired eigenvalue");
  std::vector<double> angles;
  angles.reserve(n / 2);
  for (Eigen::Index k = 0; k < n; k += 2) {
    const double a = ascending(k);
    const double b = ascending(k + 1);
    if (std::abs(a - b) > kPairTolerance)
      throw std::runtime_error("eigenphases_to_zeros: eigenvalues " + std::to_string(a) + " and " +
                               std::to_string(b) + " do not pair");
    angles.push_back(std::acos(std::clamp(0.25 * (a + b), -1.0, 1.0)));
  }
  return angles;
}

ZeroSample build_sample(SymmetryClass cls, int dim, bool forced, const std::vector<double>& angles) {
  ZeroSample zs;
  zs.cls = cls;
  zs.dim = dim;
  zs.forced_zero = forced;
  zs.zeros.reserve(2 * angles.size() + 1);
  const double scale = dim / kTwoPi;
  for (double t : angles) {
    zs.zeros.push_back(t * scale);
    zs.zeros.push_back(-t * scale);
  }
  if (forced) zs.zeros.push_back(0.0);
  std::sort(zs.zeros.begin(), zs.zeros.end());
  return zs;
}

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double evaluate(const StatisticSpec& spec, const ZeroSample& zs) {
  if (spec.kind == StatKind::OneLevel) return one_level_stat(zs, spec.tf1);
  return two_level_stat(zs, spec.tf1, spec.tf2, TwoLevelMethod::ViaIdentity);
}

}  // namespace

Eigen::MatrixXd haar_special_orthogonal(int n, Rng& rng) {
  std::normal_distribution<double> gauss;
  Eigen::MatrixXd q(n, n);
  Eigen::VectorXd v(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) v(i) = gauss(rng);
    project_out(q, j, v);
    // dividing by the norm leaves a positive diagonal in the triangular factor
    q.col(j) = v / v.norm();
  }
  if (q.partialPivLu().determinant() < 0.0) q.row(0) *= -1.0;
  return q;
}

Eigen::MatrixXcd haar_unitary_symplectic(int n, Rng& rng) {
  // A quaternion a + b j is the block [[a, b], [-conj(b), conj(a)]]. Column
  // 2k + 1 of each quaternionic column is then determined by column 2k, and
  // projecting column 2k against all earlier complex columns is the
  // quaternionic projection.
  std::normal_distribution<double> gauss;
  const int m = 2 * n;
  Eigen::MatrixXcd u(m, m);
  Eigen::VectorXcd v(m);
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < m; ++i) v(i) = {gauss(rng), gauss(rng)};
    project_out(u, 2 * k, v);
    v /= v.norm();
    u.col(2 * k) = v;
    for (int i = 0; i < n; ++i) {
      u(2 * i, 2 * k + 1) = -std::conj(v(2 * i + 1));
      u(2 * i + 1, 2 * k + 1) = std::conj(v(2 * i));
    }
  }
  return u;
}

Eigen::MatrixXcd symplectic_form(int n) {
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    j(2 * i, 2 * i + 1) = 1.0;
    j(2 * i + 1, 2 * i) = -1.0;
  }
  return j;
}

HaarMatrix sample_matrix(SymmetryClass cls, int N, Rng& rng) {
  if (N < 2) throw std::invalid_argument("sample_matrix: N must be >= 2, got " + std::to_string(N));
  if (cls == SymmetryClass::O) {
    std::bernoulli_distribution coin(0.5);
    cls = coin(rng) ? SymmetryClass::SOodd : SymmetryClass::SOeven;
  }
  HaarMatrix h;
  h.cls = cls;
  switch (cls) {
    case SymmetryClass::SOeven: h.real = haar_special_orthogonal(2 * N, rng); break;
    case SymmetryClass::SOodd: h.real = haar_special_orthogonal(2 * N + 1, rng); break;
    case SymmetryClass::Sp: h.complex = haar_unitary_symplectic(N, rng); break;
    case SymmetryClass::O: break;
  }
  return h;
}

ZeroSample eigenphases_to_zeros(const Eigen::MatrixXd& u, SymmetryClass cls) {
  const int dim = static_cast<int>(u.rows());
  const bool odd = dim % 2 == 1;
  if (cls == SymmetryClass::O) cls = odd ? SymmetryClass::SOodd : SymmetryClass::SOeven;
  return build_sample(cls, dim, odd, paired_angles(doubled_cosines<Eigen::EigenSolver<Eigen::MatrixXd>>(u), odd));
}

ZeroSample eigenphases_to_zeros(const Eigen::MatrixXcd& u, SymmetryClass cls) {
  const int dim = static_cast<int>(u.rows());
  const bool odd = dim % 2 == 1;
  return build_sample(cls, dim, odd,
                      paired_angles(doubled_cosines<Eigen::ComplexEigenSolver<Eigen::MatrixXcd>>(u), odd));
}

ZeroSample eigenphases_to_zeros(const HaarMatrix& h) {
  return h.is_complex() ? eigenphases_to_zeros(h.complex, h.cls) : eigenphases_to_zeros(h.real, h.cls);
}

double one_level_stat(const ZeroSample& zs, const TestFunction& tf) {
  double total = 0.0;
  for (double x : zs.zeros) total += tf.phi(x);
  return total;
}

double two_level_stat(const ZeroSample& zs, const TestFunction& tf1, const TestFunction& tf2,
                      TwoLevelMethod method) {
  const auto& z = zs.zeros;
  const std::size_t n = z.size();
  if (method == TwoLevelMethod::Direct) {
    // z is sorted and symmetric, so the partner of position i is n - 1 - i.
    std::vector<double> p2(n);
    for (std::size_t i = 0; i < n; ++i) p2[i] = tf2.phi(z[i]);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double inner = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == n - 1 - i) continue;
        inner += p2[k];
      }
      total += tf1.phi(z[i]) * inner;
    }
    return total;
  }
  double d1 = 0.0, d2 = 0.0, prod = 0.0;
  for (double x : z) {
    const double a = tf1.phi(x);
    const double b = tf2.phi(x);
    d1 += a;
    d2 += b;
    prod += a * b;
  }
  double result = d1 * d2 - 2.0 * prod;
  if (zs.forced_zero) result += tf1.phi(0.0) * tf2.phi(0.0);
  return result;
}

MonteCarloReport summarize(const std::string& name, std::span<const double> values) {
  const std::size_t n = values.size();
  if (n < 2) throw std::invalid_argument("summarize: need at least two values");
  MonteCarloReport r;
  r.name = name;
  r.samples = static_cast<long>(n);

  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(n);

  // mu[k] = (1/n) sum (v - mean)^k for k <= 12, enough for stderr of the 6th moment
  constexpr int kMax = 12;
  std::vector<double> mu(kMax + 1, 0.0);
  for (double v : values) {
    const double d = v - mean;
    double p = 1.0;
    for (int k = 0; k <= kMax; ++k) {
      mu[k] += p;
      p *= d;
    }
  }
  for (double& m : mu) m /= static_cast<double>(n);
  mu[1] = 0.0;

  const double dn = static_cast<double>(n);
  r.mean = mean;
  r.variance = mu[2] * dn / (dn - 1.0);
  r.mean_stderr = std::sqrt(r.variance / dn);
  r.variance_stderr = std::sqrt(std::max(0.0, mu[4] - mu[2] * mu[2]) / dn);
  r.central.assign(mu.begin(), mu.begin() + 7);
  r.central_stderr.assign(7, 0.0);
  for (int k = 2; k <= 6; ++k) {
    const double v = mu[2 * k] - mu[k] * mu[k] - 2.0 * k * mu[k - 1] * mu[k + 1] +
                     static_cast<double>(k * k) * mu[2] * mu[k - 1] * mu[k - 1];
    r.central_stderr[k] = std::sqrt(std::max(0.0, v) / dn);
  }
  return r;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL));
}

std::vector<MonteCarloReport> monte_carlo(const MonteCarloConfig& config) {
  if (config.samples < 100)
    throw std::invalid_argument("monte_carlo: need at least 100 samples, got " +
                                std::to_string(config.samples));
  if (config.statistics.empty()) throw std::invalid_argument("monte_carlo: no statistics requested");
  if (config.first_sample < 0) throw std::invalid_argument("monte_carlo: first_sample must be >= 0");

  const std::size_t n = static_cast<std::size_t>(config.samples);
  const std::size_t stats = config.statistics.size();
  std::vector<std::vector<double>> values(stats, std::vector<double>(n));

  std::atomic<std::size_t> next{0};
  const auto work = [&]() {
    for (std::size_t i = next++; i < n; i = next++) {
      Rng rng(sample_seed(config.seed, config.first_sample + i));
      const ZeroSample zs = eigenphases_to_zeros(sample_matrix(config.cls, config.N, rng));
      for (std::size_t s = 0; s < stats; ++s) values[s][i] = evaluate(config.statistics[s], zs);
    }
  };

  const int workers = std::max(1, config.workers);
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&]() {
        try {
          work();
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = n;
        }
      });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
  }

  std::vector<MonteCarloReport> reports;
  reports.reserve(stats);
  for (std::size_t s = 0; s < stats; ++s) {
    reports.push_back(summarize(config.statistics[s].name, values[s]));
    if (config.keep_values) reports.back().values = std::move(values[s]);
  }
  return reports;
}

}  // namespace lowlying
