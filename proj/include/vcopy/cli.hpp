#pragma once

#include <string>
#include <vector>

namespace vcopy {

struct CliResult {
  int exit_code = 0;        // 0 ok, 1 verification failed, 2 malformed input
  std::string output;       // the emitted document
  std::string diagnostics;  // human-oriented messages for stderr
};

/// Runs one command line (without the program name). Never throws.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace vcopy
