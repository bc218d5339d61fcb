#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace shortcycles::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNone = 2;

// Runs the command line `args` (without the program name). Instance text is
// read from the named file, or from `in` when the file argument is "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace shortcycles::cli
