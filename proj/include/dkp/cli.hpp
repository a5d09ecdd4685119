#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dkp::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailure = 1,
  kUsage = 2,
  kIoFailure = 3,
  kDegenerate = 4,
};

/// Entry point shared by the `dkp` executable and the tests.
/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dkp::cli
