#pragma once

#include <iosfwd>

namespace p1p1::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid_input = 2;
inline constexpr int exit_verification_failure = 3;

// Parses the command line, runs one subcommand and writes its report to
// `out`; diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace p1p1::cli
