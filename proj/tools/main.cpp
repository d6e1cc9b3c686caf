#include <iostream>
#include <string>
#include <vector>

#include "kirchhoff/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  kirchhoff::CliResult result = kirchhoff::run_cli(args);
  if (!result.output.empty()) {
    (result.exit_code == 2 ? std::cerr : std::cout) << result.output;
    if (result.output.back() != '\n') (result.exit_code == 2 ? std::cerr : std::cout) << "\n";
  }
  return result.exit_code;
}
