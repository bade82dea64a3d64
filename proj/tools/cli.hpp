#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ybx::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kResourceGuard = 3,
};

// Runs one `ybx` invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ybx::cli
