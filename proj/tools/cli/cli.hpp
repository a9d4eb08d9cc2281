#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperk::cli {

/// Exit codes of the hyperk tool.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  /// Parse errors, bad usage, invalid arguments, unknown suite.
  kUsage = 2,
  /// Well-formed input describing no geodesic, horocycle or hypercycle, or a
  /// construction with no (non-degenerate) result.
  kDegenerate = 3,
  kUnwritable = 4,
  /// A search cap, size guard or undecidable tolerance was hit.
  kLimit = 5,
};

/// Runs the tool on args (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hyperk::cli
