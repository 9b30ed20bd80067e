#pragma once

#include <iosfwd>

namespace bolano {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitUserError = 2,
  kExitIoError = 3,
  kExitInternalError = 4,
};

/// Entry point of the bolano executable, with injectable streams.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bolano
