#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace obstructionist::cli {

/// Exit statuses of the command-line tool.
enum Status : int { Success = 0, VerificationFailed = 1, UsageError = 2 };

/// Runs one command line. args[0] is the program name. Output goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace obstructionist::cli
