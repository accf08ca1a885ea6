#ifndef VALDIM_CLI_HPP
#define VALDIM_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace valdim {

// Runs the command-line tool on `args` (program name excluded) and returns
// the process exit code:
//   0   success; negative answers (infeasible, incompatible, violated) are
//       answers, not failures
//   1   evaluation error: unreadable file, unknown dimension, value outside
//       its carrier, carrier cap exceeded
//   2   malformed document (parse error, including unknown or duplicate names)
//   64  usage error (bad flags, missing subcommand or argument)
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace valdim

#endif  // VALDIM_CLI_HPP
