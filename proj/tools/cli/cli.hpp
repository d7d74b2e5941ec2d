#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tda::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitInternal = 2;

/// Runs one `tda` invocation. args[0] is the program name. Results go to the
/// files named by -o, or to `out` when no file is given; errors go to `err` as
/// a single `error: <kind>: <message>` line.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tda::cli
