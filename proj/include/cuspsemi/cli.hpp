#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cuspsemi::cli {

inline constexpr const char* kToolkitVersion = "0.1.0";

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailure = 1,
  kUsageError = 2,
  kNumericError = 3,
  kSeedDisagreement = 4,
};

/// Runs one command line (without the program name), writing reports to
/// `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cuspsemi::cli
