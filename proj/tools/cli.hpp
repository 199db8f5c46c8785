#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace equipart::cli {

enum ExitCode : int {
  kOk = 0,
  kUsageError = 1,
  kPreconditionViolated = 2,
  kVerificationFailed = 3,
};

// Runs one `equipart` invocation. args[0] is the program name. Machine
// output (JSON) goes to `out`, diagnostics to `err`; "-" as an input path
// reads from `in`.
int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err);

}  // namespace equipart::cli
