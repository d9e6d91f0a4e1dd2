#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pcg {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitBadInput = 1,
  kExitVerificationFailed = 2,
};

/// Runs one pcgtool invocation. `args` excludes the program name. File
/// arguments of "-" read from `in`; results go to `out` unless --output names a
/// file; errors are a single "error: <Kind>: <message>" line on `err`.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace pcg
