#pragma once

#include <string>
#include <vector>

namespace flagorder {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name) and captures its output.
/// Exit codes: 0 pass or partial, 1 fail or library error, 2 usage error.
CliResult run_cli(const std::vector<std::string>& args);

/// Process entry point; writes captured output to stdout/stderr.
int run(int argc, char** argv);

}  // namespace flagorder
