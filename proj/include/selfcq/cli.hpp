#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace selfcq {

/// Runs the command line tool on `args` (without the program name).
/// Exit codes: 0/1 as documented per subcommand, 2 usage or input errors,
/// 3 exhausted budgets.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace selfcq
