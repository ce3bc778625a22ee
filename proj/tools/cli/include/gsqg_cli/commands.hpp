#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gsqg/analytic.hpp"
#include "gsqg/error.hpp"
#include "gsqg_cli/verify.hpp"

namespace gsqg::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitCheckFailure = 1,
  kExitUsage = 2,
  kExitNumerical = 3,
  kExitNoBreaking = 4,
};

int exit_code_for(ErrorKind kind);

struct FTableOptions {
  std::vector<double> alphas = {0.0, 0.5, 1.0, 1.5};
  double beta_lo = 0.0;
  double beta_hi = 4.0;
  double beta_step = 0.01;
  double tol = kDefaultTol;
  std::string out = ".";
};

/// Writes f_table.csv and f_table.svg.
int cmd_f_table(const FTableOptions& options, std::ostream& log);

struct BetaStarOptions {
  std::vector<double> alphas = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  double tol = 1e-10;
  std::string out = ".";
};

/// Writes beta_star.csv.
int cmd_beta_star(const BetaStarOptions& options, std::ostream& log);

struct VerifyCommandOptions {
  VerifyOptions verify;
  std::string out;
};

/// Prints the text report, writes verify.json when `out` is set; exit 1 on any failure.
int cmd_verify(const VerifyCommandOptions& options, std::ostream& log);

struct OracleOptions {
  std::vector<double> alphas = {0.5};
  std::vector<double> betas = {1.0};
  std::vector<double> probes = {0.1};
  double delta = 0.01;
  double M = 1.0;
  int jobs = 1;
  /// Output file; empty writes the CSV to `log`.
  std::string out;
};

/// One WedgeOracleReport row per (alpha, beta, a), rows in input order.
int cmd_oracle(const OracleOptions& options, std::ostream& log);

struct RunOptions {
  std::string config;
  std::string out = ".";
  /// Config keys replaced after parsing, e.g. {"alpha", "0.5"}.
  std::vector<std::pair<std::string, std::string>> overrides;
};

/// Writes snapshot CSVs, manifest.json and SVG frames. A simulation failure
/// keeps the partial output and returns kExitNumerical.
int cmd_simulate(const RunOptions& options, std::ostream& log);

/// Writes convexity.json; kExitNoBreaking when no snapshot breaks convexity.
int cmd_convexity(const RunOptions& options, std::ostream& log);

/// Config keys and their defaults, for --help.
std::string config_keys_help();

}  // namespace gsqg::cli
