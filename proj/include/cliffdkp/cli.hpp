#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cliffdkp::cli {

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics to `err`. Returns 0 if every check passed, 1 if a check
/// failed and 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cliffdkp::cli
