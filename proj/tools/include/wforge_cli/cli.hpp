#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wforge::cli {

inline constexpr int kExitPass = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

// Runs one command line (without the program name). Reports go to `out`,
// diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wforge::cli
