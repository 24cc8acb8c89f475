#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace corrideal {

/// Runs one CLI invocation (args excludes the program name) writing results
/// to `out` and diagnostics to `err`. Exit codes: 0 success, 1 input
/// validation failure, 2 precondition failure, 3 I/O or parse failure.
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace corrideal
