#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccjac {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,             // success, or a positive verdict
  kExitNegative = 1,       // negative verdict
  kExitUsage = 2,          // usage or parse error
  kExitContradiction = 3,  // an instance contradicting a theorem; reproduction data is printed
};

/// Runs one command; `args` excludes the program name.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ccjac
