#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace besse::cli {

enum ExitStatus : int {
  kOk = 0,
  kInvalidInput = 1,
  kInconsistent = 2,
};

/// Runs one command line (args[0] is the program name). The report goes to
/// `out`; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace besse::cli
