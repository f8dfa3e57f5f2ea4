#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dnacode::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kOk = 0,
    kDomainError = 1,  ///< uncorrectable word, wrong length, bad message, ...
    kUsageError = 2,   ///< bad arguments, unreadable files, malformed input text
};

/// Runs one invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace dnacode::cli
