#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace emotk::cli {

/// Stable process exit codes.
enum ExitCode : int {
    kOk = 0,
    kIoOrParse = 1,
    kInvalidFlags = 2,
    kDeficit = 3,
    kMisaligned = 4,
    kBadLabel = 5,
};

/// Runs `emotk <subcommand> ...`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace emotk::cli
