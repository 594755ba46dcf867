#include <cstdio>
#include <string>
#include <vector>

#include "cartk/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  cartk::CliResult result = cartk::run_cli(args);
  std::fputs(result.output.c_str(), result.exit_code == 0 ? stdout : stderr);
  return result.exit_code;
}
