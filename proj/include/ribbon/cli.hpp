#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ribbon::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,        // success, or the compositions are equivalent
  kNegative = 1,  // not equivalent, or differences found
  kUsage = 2,     // bad arguments, unparsable input, budget exceeded
};

/// Environment variable naming the default sequence cache directory.
inline constexpr const char* kCacheDirEnv = "RIBBON_CACHE_DIR";

/// Runs the command line `args` (args[0] is the program name) and returns
/// the exit code. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ribbon::cli
