#ifndef RELSPIN_TOOLS_CLI_HPP
#define RELSPIN_TOOLS_CLI_HPP

#include <ostream>
#include <span>
#include <string>

namespace relspin::cli {

// Exit codes of run().
inline constexpr int kOk = 0;
inline constexpr int kInputError = 1;
inline constexpr int kSolverError = 2;
inline constexpr int kVerificationFailed = 3;

/// Entry point without the program name: args[0] is the subcommand
/// (reflect, well, sweep, verify).  Data goes to `out` (or --output),
/// single-line diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace relspin::cli

#endif
