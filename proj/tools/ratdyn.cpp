#include <iostream>
#include <string>
#include <vector>

#include "ratdyn/cli/commands.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const ratdyn::CommandResult r = ratdyn::run_command(args);
  std::cout << r.out << std::flush;
  std::cerr << r.err << std::flush;
  return r.exit_code;
}
