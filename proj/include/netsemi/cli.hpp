// cli.hpp -- command-line front end. The binary in tools/ is a thin wrapper
// around run_cli so the whole surface stays testable in-process.

#ifndef NETSEMI_CLI_HPP
#define NETSEMI_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace netsemi {

/// Dispatches one invocation. Returns the process exit status: 0 on
/// success or a passing verification, 1 on a failed verification (or no
/// isomorphism found), 2 on usage and parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace netsemi

#endif  // NETSEMI_CLI_HPP
