#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cusp/config.hpp"
#include "cusp/error.hpp"

namespace cusp {

enum ExitStatus : int { ExitPass = 0, ExitFail = 1, ExitConfig = 2, ExitRefused = 3 };

/// NonBanal -> 3; errors raised while computing -> 1; everything else -> 2.
int exit_status_for(ErrorCode code);

/// Runs one command and writes the report to `out`; diagnostics go to `err`.
/// When c.out is set the report goes to that file instead.
int run_command(const RunConfig& c, std::ostream& out, std::ostream& err);

struct CommandResult {
  std::string report;
  bool pass = false;
  /// Names of the failed checks.
  std::vector<std::string> failed;
};

CommandResult cmd_bessel_table(const RunConfig& c);
CommandResult cmd_verify(const RunConfig& c);
CommandResult cmd_reduce(const RunConfig& c);
CommandResult cmd_oracle_check(const RunConfig& c);

}  // namespace cusp
