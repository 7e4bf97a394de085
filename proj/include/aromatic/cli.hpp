#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace aromatic {

/// Runs the command line with `args` (program name excluded). Returns 0 on
/// success, 1 on a domain or input error (including failed verifications),
/// 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace aromatic
