#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace dsr::cli {

/// Exit codes: 0 success, 1 usage/parse error, 2 numerical failure
/// (divergence, non-convergence), 3 reproduction FAIL.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitNumerical = 2;
inline constexpr int kExitReproFail = 3;

struct RunConfig {
  std::optional<std::string> graph_path;  // built-in ring scenario when absent
  std::optional<double> gamma;
  std::optional<double> beta;
  double delta_t = 0.01;
  double step_magnitude = 1.5707963267948966;  // pi/2
  std::optional<double> horizon;               // seconds
  std::string mode;
  std::optional<std::string> grid;  // LO:HI:STEP
  std::string output_dir = ".";
};

/// Runs one subcommand (analyze, sweep, simulate, formation,
/// reproduce-paper); args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace dsr::cli
