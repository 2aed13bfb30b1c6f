#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace lowlying::cli {

/// Everything a run depends on. Seed and workers fix the Monte Carlo output.
struct RunConfig {
  std::string command;
  std::uint64_t seed = 7;
  int workers = 1;
  std::string output = "-";  // "-" is stdout
  std::string format = "json";

  std::string group = "O";
  int size = 100;
  long samples = 10000;
  std::string family = "fejer";
  double nu = 0.5;
  std::string stat = "d1";
  std::string theorem = "all";
  std::string suite = "all";
  std::string monitor = "all";
  int kappa = 12;
  std::uint64_t q = 11;
  int r = 1;
  long m = 4;
  long n = 1;
  std::uint64_t c = 0;
  int n_max = 20;
  double tol = 1e-8;
  double theta = 7.0 / 64.0;
  double X = 100.0;
  int terms = 8;
};

nlohmann::json to_json(const RunConfig& config);

/// One line of a report. Monitors and plain evaluations leave `predicted`
/// and `pass` unset.
struct Result {
  std::string name;
  double value = 0.0;
  std::optional<double> predicted;
  double std_error = 0.0;
  double tolerance = 0.0;
  std::optional<bool> pass;
};

struct Report {
  std::string command;
  nlohmann::json config;
  std::vector<Result> results;
  std::vector<std::string> notes;

  [[nodiscard]] bool ok() const;
};

// Runs the command without touching the filesystem.
Report execute(const RunConfig& config);

nlohmann::json report_json(const Report& report, const std::string& timestamp);
std::string report_csv(const Report& report);
std::string utc_timestamp();

/// Executes, writes the report to config.output and returns the exit code:
/// 0 when every asserted result passed, 1 otherwise.
int run(const RunConfig& config);

/// Property suites shared by `verify` and the acceptance binary. Names:
/// arith, chebyshev, partitions, testfn, kernels, toolbox, rmt, deltasym, all.
/// Throws std::invalid_argument for an unknown name.
std::vector<Result> verify_suite(const std::string& suite, std::uint64_t seed, int workers = 1);

}  // namespace lowlying::cli
