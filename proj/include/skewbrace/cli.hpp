#pragma once

#include <string>
#include <vector>

namespace skewbrace {

// Exit status contract: 0 = success / property holds, 1 = well-formed input
// with a negative mathematical answer, 2 = usage or format error.
struct CommandResult {
  int status = 0;
  std::string report;
};

// Dispatches one subcommand. args excludes the program name. The report is
// everything the tool prints; it is byte-deterministic for fixed inputs.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace skewbrace
