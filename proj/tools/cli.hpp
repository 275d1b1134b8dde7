#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace udc::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kParse = 3,
  kVerifyFailed = 4,
};

/// Runs the `udc` command line. args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace udc::cli
