#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lucaszeck::cli {

/// Process exit codes.
enum ExitCode : int {
    kOk = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kOverflow = 3,
    kGoldenMismatch = 4,
};

/// Runs one command line (without the program name). Data goes to `out`,
/// diagnostics to `err`; returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lucaszeck::cli
