#pragma once

#include <string>
#include <vector>

namespace imb {

/// Full command-line front end. Returns the process exit code:
/// 0 for an optimum or YES decision, 1 for NO, 2 for parse or validation
/// errors.
int run_cli(const std::vector<std::string>& args);

} // namespace imb
