#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ringgraph::cli {

enum ExitStatus : int {
  kOk = 0,
  kFailure = 1,        // verification failed or unexpected error
  kUsage = 2,          // bad flags, bad descriptor, unknown suite
  kSizeLimit = 3,
  kNotUnital = 4,
};

// Runs the command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ringgraph::cli
