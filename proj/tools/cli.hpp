#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sumfree::cli {

enum ExitCode : int {
  kPass = 0,
  kFailure = 1,  // certified failure or none_exists
  kUsage = 2,    // usage or domain error
  kBudget = 3,   // node budget exhausted
};

/// Entry point behind the sumfree executable. `args` excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sumfree::cli
