#ifndef EMLTAB_TOOLS_CLI_HPP
#define EMLTAB_TOOLS_CLI_HPP

#include <iosfwd>

namespace emltab::cli {

inline constexpr int kExitSat = 0;
inline constexpr int kExitUnsat = 1;
inline constexpr int kExitUsage = 2;

/// Runs the command line tool.  Output goes to `out`, diagnostics to `err`.
/// Exit codes: 0 sat (or found), 1 unsat (or not found, or bench
/// disagreement), 2 usage, parse or input error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace emltab::cli

#endif  // EMLTAB_TOOLS_CLI_HPP
