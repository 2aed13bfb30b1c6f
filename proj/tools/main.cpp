#include <exception>
#include <iostream>

#include <CLI11.hpp>

#include "cli.hpp"

int main(int argc, char** argv) {
  using lowlying::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"Low-lying zeros of symmetric power L-functions: predictions, simulations, checks"};
  app.set_config("--config", "", "flat key=value file read before the flags; flags win");

  app.add_option("command", cfg.command,
                 "predict | rmt-sim | petersson | kloosterman | delta | prime-sums | verify | monitor")
      ->required();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--workers", cfg.workers, "worker threads")->envname("LOWLYING_WORKERS")->capture_default_str();
  app.add_option("--output,-o", cfg.output, "report path, - for stdout")->capture_default_str();
  app.add_option("--format", cfg.format, "json or csv")->capture_default_str();

  app.add_option("--group", cfg.group, "so-even, so-odd, o, sp")->capture_default_str();
  app.add_option("--size", cfg.size, "N: matrices of size 2N or 2N+1")->capture_default_str();
  app.add_option("--samples", cfg.samples, "Monte Carlo samples")->capture_default_str();
  app.add_option("--family", cfg.family, "fejer or cos2")->capture_default_str();
  app.add_option("--nu", cfg.nu, "Fourier support of the test function")->capture_default_str();
  app.add_option("--stat", cfg.stat, "d1, d2, var, m3, m4, moments")->capture_default_str();
  app.add_option("--theorem", cfg.theorem, "B, C, D, F, sign, bounds, all")->capture_default_str();
  app.add_option("--suite", cfg.suite, "verify suite name or all")->capture_default_str();
  app.add_option("--monitor", cfg.monitor, "sieve, picard, all")->capture_default_str();
  app.add_option("--kappa", cfg.kappa, "weight")->capture_default_str();
  app.add_option("--q", cfg.q, "level")->capture_default_str();
  app.add_option("--r", cfg.r, "symmetric power")->capture_default_str();
  app.add_option("--m", cfg.m, "moment order, or first Kloosterman index")->capture_default_str();
  app.add_option("--n", cfg.n, "second Kloosterman index")->capture_default_str();
  app.add_option("--c", cfg.c, "Kloosterman modulus")->capture_default_str();
  app.add_option("--n-max", cfg.n_max, "grid size for petersson and delta")->capture_default_str();
  app.add_option("--tol", cfg.tol, "truncation budget")->capture_default_str();
  app.add_option("--theta", cfg.theta, "Ramanujan exponent")->capture_default_str();
  app.add_option("--X", cfg.X, "argument scale for the picard monitor")->capture_default_str();
  app.add_option("--terms", cfg.terms, "coefficients per sequence in the sieve monitor")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  try {
    return lowlying::cli::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
