#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schubert::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
};

/// Parses `args` (without the program name) and runs one subcommand.
/// Results go to `out`; every diagnostic goes to `err` prefixed "error:".
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3,3,0" -> {3,3,0}. Throws std::invalid_argument on malformed input.
std::vector<int> parse_int_list(const std::string& text);

}  // namespace schubert::cli
