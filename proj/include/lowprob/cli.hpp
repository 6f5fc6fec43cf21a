#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lowprob::cli {

enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kUndefinedConditional = 2,
  kPreconditionUnmet = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// (or to the --output file), diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lowprob::cli
