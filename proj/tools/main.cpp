#include <cstdio>
#include <string>
#include <vector>

#include "skewbrace/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const skewbrace::CommandResult result = skewbrace::run_cli(args);
  std::fputs(result.report.c_str(), stdout);
  return result.status;
}
