#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace prelie {

/// Runs one CLI invocation (args exclude the program name). Returns 0 on
/// success, 1 on a failed verification, 2 on usage or input parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prelie
