#pragma once

#include <string>
#include <vector>

namespace ratdyn {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one ratdyn invocation; `args` excludes the program name.
///
/// Exit codes: 0 on success, 1 when a predicate command (check, verify,
/// selftest) answers negatively, 2 on usage, input and precondition
/// errors. Errors are reported as a JSON document with an "error" object.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace ratdyn
