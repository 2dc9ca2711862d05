#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace digitprod::cli {

// Process exit codes.
inline constexpr int kOk = 0;
inline constexpr int kRefuted = 1;
inline constexpr int kExportBlocked = 2;
inline constexpr int kHoldsWithUndecided = 3;
inline constexpr int kUsage = 64;
inline constexpr int kIoError = 74;

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace digitprod::cli
