#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpoly::cli {

/// Exit codes shared by all commands.
enum Exit : int {
  kOk = 0,
  kViolated = 1,
  kUsage = 2,
  kEvaluation = 3,
  kInconclusive = 4,
};

/// Runs the command line `args` (without the program name). Reports go to
/// `out` (or the --out file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qpoly::cli
