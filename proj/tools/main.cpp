#include <iostream>
#include <string>
#include <vector>

#include "vcopy/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  vcopy::CliResult r = vcopy::run_cli(args);
  std::cout << r.output;
  std::cerr << r.diagnostics;
  return r.exit_code;
}
