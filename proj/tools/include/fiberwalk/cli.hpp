#pragma once

// The fiberwalk command line. run_cli is the whole program minus argv
// handling, so tests can drive it in-process.

#include <ostream>
#include <string>
#include <vector>

namespace fiberwalk::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kConfigError = 2,
  kBudgetExceeded = 3,
  kFinitenessUncertified = 4,
};

/// `args` excludes the program name. Human-readable text goes to `out`,
/// diagnostics to `err`; machine formats are written under --out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, as lowercase hex.
std::string fnv1a_hex(const std::string& data);

}  // namespace fiberwalk::cli
