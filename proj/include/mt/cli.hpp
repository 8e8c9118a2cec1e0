#pragma once

#include <iosfwd>

#include "mt/error.hpp"

namespace mt {

/// Process exit codes.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitFailure = 1,  // selftest failures, unexpected errors
  kExitInconclusive = 2,
  kExitInputError = 3,
  kExitPrecisionError = 4,
};

int exit_code_for(ErrorCode code);

/// Entry point of the command-line tool; returns the process exit code.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace mt
