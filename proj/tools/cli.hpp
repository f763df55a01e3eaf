#ifndef LAZYSTREAMS_TOOLS_CLI_HPP
#define LAZYSTREAMS_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace lazystreams::cli {

inline constexpr int kOk = 0;
inline constexpr int kOracleMismatch = 1;  // demo output differs from a transcript
inline constexpr int kUsageError = 2;      // bad flags, lexical or syntax error
inline constexpr int kSlowGenerator = 3;   // bench: generator > 2x slower (informational)

/// Entry point without the program name:
///   eval EXPR [--take N] [--seed S]
///   demo
///   bench [--op nat_sum|map_chain|prod_prefix] [--n SIZE] [--impl generator|lazylist|both]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Prints every transcript check; returns kOracleMismatch if any differs.
int run_demo(std::ostream& out);

}  // namespace lazystreams::cli

#endif  // LAZYSTREAMS_TOOLS_CLI_HPP
