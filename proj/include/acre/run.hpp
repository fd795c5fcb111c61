#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace acre {

struct RunConfig {
  std::string subcommand;
  std::string spec_path;
  /// Spec keys given on the command line; they override the spec file.
  std::map<std::string, std::string> spec_keys;
  std::string output_dir = "out";
  std::uint64_t seed = 1;
  std::vector<std::string> formats{"csv", "json"};
  std::string grid;
  std::string ygrid;
  std::vector<int> ladder;
  unsigned threads = 0;

  // Limit profile selection for limits and ward.
  std::string variant = "free";
  double rho = 4.0;
  double c1 = 1.0;
  double c2 = 1.0;
  double tau1 = 0.0;
  double tau2 = 1.0;
  double tau = 1.0;

  int trials = 1000;
  bool dump_moduli = false;

  double h = 0.02;
  double L = 8.0;
  bool indicator_terms = true;

  /// Optional tolerance; NaN disables the check.
  double tol = NAN;
};

enum ExitCode { kExitOk = 0, kExitConfig = 2, kExitTolerance = 3, kExitNumerical = 4 };

struct RunResult {
  int exit_code = kExitOk;
  std::string message;
  std::vector<std::string> artifacts;
};

/// Parses command-line arguments (without the program name). Throws
/// ConfigError on invalid input.
RunConfig parse_cli(const std::vector<std::string>& args);

/// Executes one subcommand and writes its artifacts under output_dir.
RunResult run(const RunConfig& config);

/// Full command-line entry point, returning the process exit status.
int cli_main(int argc, char** argv);

/// "lo:hi:step" to the list lo, lo + step, ..., hi.
std::vector<double> parse_grid(const std::string& text);

}  // namespace acre
