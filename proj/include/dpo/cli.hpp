#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace dpo::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kParseError = 1,  // parse failure or violated precondition
  kDangling = 2,
  kVerdictFalse = 3,
  kDependent = 4,
  kInternal = 5,
};

/// Runs one command line. Machine-readable output goes to `out`, the
/// human-readable summary to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dpo::cli
