#pragma once

// Command-line front end. Results go to `out`, diagnostics to `err`.
//
// Exit codes: 0 success, 1 a verification report failed, 2 malformed input
// or arguments, 3 disconnected graph, 4 unknown vertex or edge, 5 a violated
// hypothesis or any other error.

#include <iosfwd>
#include <string>
#include <vector>

namespace kirchhoff {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kirchhoff
