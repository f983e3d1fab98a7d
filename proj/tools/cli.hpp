#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bruhatcube::cli {

enum ExitCode : int {
  kSuccess = 0,
  kNegative = 1,
  kUsage = 2,
  kSizeGuard = 3,
};

/// Runs one command line. args excludes the program name. Results go to `out`
/// (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bruhatcube::cli
