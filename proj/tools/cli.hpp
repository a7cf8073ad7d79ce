#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace roelcke::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInvariant = 3;

// Runs the `roelcke` command line with `args` (program name excluded).
// Input named "-" is read from `in`; results go to `out` unless --out is
// given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace roelcke::cli
