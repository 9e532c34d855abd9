#ifndef CYCLEMAT_TOOLS_CLI_HPP
#define CYCLEMAT_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace cyclemat::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_negative = 1;
inline constexpr int exit_error = 2;

/// Runs one command line (without the program name). A matrix argument "-"
/// is read from `in`.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err,
        std::istream &in);

} // namespace cyclemat::cli

#endif // CYCLEMAT_TOOLS_CLI_HPP
