#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace midy {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    kExitOk = 0,
    kExitFailure = 1,       ///< self-test failure, replay mismatch, internal error
    kExitInvalidInput = 2,
    kExitCapExhausted = 3,
    kExitDisagreement = 4,
};

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace midy
