#ifndef CARTK_CLI_HPP
#define CARTK_CLI_HPP

#include <string>
#include <vector>

namespace cartk {

struct CliResult {
  int exit_code;      // 0 ok, 1 usage, 2 budget/stabilization, 3 verification
  std::string output;
};

/// Runs one CLI invocation (argv without the program name). All output is
/// returned rather than printed, which keeps invocations testable and
/// byte-deterministic.
CliResult run_cli(const std::vector<std::string>& args);

}  // namespace cartk

#endif
