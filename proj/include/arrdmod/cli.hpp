#pragma once

#include <string>
#include <vector>

namespace arrdmod::cli {

struct ExecResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name), e.g.
/// {"factors", "--input", "ex.json", "--format", "json"}.
///
/// Exit codes: 0 success, 1 I/O failure, 2 usage, validation or
/// precondition failure (one-line diagnostic on stderr).
ExecResult execute(const std::vector<std::string>& args);

}  // namespace arrdmod::cli
