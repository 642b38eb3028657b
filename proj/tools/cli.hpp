#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace losemilat::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitParseError = 2;
inline constexpr int kExitCapExceeded = 3;
inline constexpr int kExitUnsupportedRegime = 4;

/// Runs the command line given without the program name, e.g. {"solve", "--l", "3", "x1 = x2"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace losemilat::cli
