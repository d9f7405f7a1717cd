#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ipd {

/// Runs the command line `args` (without the program name). Returns the
/// process exit code: 0 success, 1 failed verification or computation, 2
/// usage or configuration error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ipd
