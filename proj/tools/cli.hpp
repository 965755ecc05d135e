#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace medianvote::cli {

// Exit codes: 0 success or positive verdict, 1 negative verdict, 2 input error.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kInputError = 2;

/// Runs one command line (args exclude the program name). Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace medianvote::cli
