#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace horo::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int { kOk = 0, kDomainError = 1, kInputError = 2 };

/// Runs one invocation; args excludes the program name. Output goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace horo::cli
