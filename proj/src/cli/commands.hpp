#ifndef ORBITCAT_CLI_COMMANDS_HPP
#define ORBITCAT_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace orbitcat::cli
{

enum ExitCode
{
  exit_ok = 0,
  exit_check_failed = 1,
  exit_usage = 2,
  exit_resource = 3,
};

// Runs `orbitcat <args...>`; args excludes the program name.
int run(std::vector<std::string> const &args, std::ostream &out,
        std::ostream &err);

} // namespace orbitcat::cli

#endif // ORBITCAT_CLI_COMMANDS_HPP
