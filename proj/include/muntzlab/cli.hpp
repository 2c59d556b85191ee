#pragma once

#include <ostream>
#include <string>

#include "muntzlab/rational.hpp"

namespace muntzlab {

/// Parsed invocation of one experiment subcommand. Rationals cross this
/// boundary as "num/den" strings only.
struct RunConfig {
  std::string command;
  long seed = 7;
  long degree = 20;
  long trials = 200;
  long n_max = 40;
  Rational rho{1, 2};
  long grid_points = 1001;
  std::string operator_name = "hardy";  // vanish only
  long max_exponent = 12;               // gram-det / conditioning upper exponent
  long max_size = 6;                    // gram-det / cauchy-check matrix size cap
  std::string format = "json";
  std::string output_path;  // empty = stdout
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs exactly one experiment and writes records to `out`. Returns 0 when
/// every assertion of the experiment holds, 1 on any check failure, 2 on a
/// configuration error (diagnostics go to `err`).
int dispatch(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace muntzlab
