#include <iostream>
#include <string>
#include <vector>

#include "arrdmod/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = arrdmod::cli::execute(args);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
