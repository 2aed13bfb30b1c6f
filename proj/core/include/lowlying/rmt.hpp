#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lowlying/kernels.hpp"
#include "lowlying/testfn.hpp"

/// Random matrix side of the family/ensemble dictionary.
///
/// A Haar matrix of size M stands in for a family of L-functions with
/// conductor q^r. Its eigenangles theta are scaled to x = theta M / (2 pi),
/// which gives mean spacing 1, just as the zeros gamma are scaled by
/// log(q^r) / (2 pi). Statistics are then compared with the limiting kernels
/// in kernels.hpp.
namespace lowlying {

using Rng = std::mt19937_64;

/// One Haar draw. For the orthogonal classes `real` holds the matrix and
/// `complex` is empty; for Sp it is the other way round. `cls` is the class
/// actually drawn, so an O request yields SOeven or SOodd.
struct HaarMatrix {
  SymmetryClass cls = SymmetryClass::SOeven;
  Eigen::MatrixXd real;
  Eigen::MatrixXcd complex;

  [[nodiscard]] bool is_complex() const { return complex.size() > 0; }
  [[nodiscard]] Eigen::Index dim() const { return is_complex() ? complex.rows() : real.rows(); }
};

// Haar SO(n) via Gram-Schmidt, reorthogonalized, on a Gaussian n x n matrix.
Eigen::MatrixXd haar_special_orthogonal(int n, Rng& rng);
// Haar USp(2n) via quaternionic Gram-Schmidt, as a 2n x 2n complex matrix.
Eigen::MatrixXcd haar_unitary_symplectic(int n, Rng& rng);

// Standard skew form: block diagonal with [[0, 1], [-1, 0]] blocks.
Eigen::MatrixXcd symplectic_form(int n);

/// SOeven -> SO(2N), SOodd -> SO(2N+1), O -> fair coin between the two,
/// Sp -> USp(2N). Throws std::invalid_argument for N < 2.
HaarMatrix sample_matrix(SymmetryClass cls, int N, Rng& rng);

/// Scaled eigenangles of one matrix. `zeros` contains every x_j, signed,
/// sorted ascending; for an odd orthogonal matrix it also contains x_0 = 0.
struct ZeroSample {
  SymmetryClass cls = SymmetryClass::SOeven;
  int dim = 0;
  bool forced_zero = false;
  std::vector<double> zeros;
};

/// Angles come from the eigenvalues 2 cos(theta) of U + U^T (or U + U^*),
/// each of which occurs twice. Throws std::runtime_error if two consecutive
/// values fail to pair within 1e-6, which means U was not in the class.
ZeroSample eigenphases_to_zeros(const Eigen::MatrixXd& u, SymmetryClass cls);
ZeroSample eigenphases_to_zeros(const Eigen::MatrixXcd& u, SymmetryClass cls);
ZeroSample eigenphases_to_zeros(const HaarMatrix& h);

// sum_j phi(x_j)
double one_level_stat(const ZeroSample& zs, const TestFunction& tf);

enum class TwoLevelMethod { Direct, ViaIdentity };

/// sum over ordered pairs j1 != +-j2 of phi1(x_j1) phi2(x_j2). The identity
/// form is D1(phi1) D1(phi2) - 2 D1(phi1 phi2) + [forced zero] phi1(0) phi2(0).
double two_level_stat(const ZeroSample& zs, const TestFunction& tf1, const TestFunction& tf2,
                      TwoLevelMethod method = TwoLevelMethod::ViaIdentity);

enum class StatKind { OneLevel, TwoLevel };

struct StatisticSpec {
  std::string name;
  StatKind kind = StatKind::OneLevel;
  TestFunction tf1 = TestFunction::fejer(0.5);
  TestFunction tf2 = TestFunction::fejer(0.5);
};

struct MonteCarloConfig {
  SymmetryClass cls = SymmetryClass::SOeven;
  int N = 100;
  long samples = 10000;
  long first_sample = 0;  // index of the first sample; a run can be extended by continuing from here
  std::uint64_t seed = 1;
  int workers = 1;
  std::vector<StatisticSpec> statistics;
  bool keep_values = true;
};

struct MonteCarloReport {
  std::string name;
  long samples = 0;
  double mean = 0.0;
  double mean_stderr = 0.0;
  double variance = 0.0;
  double variance_stderr = 0.0;
  // central[k] is the k-th centered moment, k = 0..6 (central[0] = 1, central[1] = 0).
  std::vector<double> central;
  std::vector<double> central_stderr;
  std::vector<double> values;  // per-sample values in sample order, if kept
};

// Moments of a list of per-sample values, with delta-method standard errors.
MonteCarloReport summarize(const std::string& name, std::span<const double> values);

/// Samples `samples` matrices and evaluates every statistic on each. Sample i
/// (counted from first_sample) draws from its own generator seeded by
/// (seed, i), so the result does not depend on the worker count. Throws std::invalid_argument for samples < 100
/// or an empty statistic list.
std::vector<MonteCarloReport> monte_carlo(const MonteCarloConfig& config);

// Seed of the generator for sample `index`.
std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace lowlying
