#pragma once

// Command-line front end. Exit codes: 0 success, 1 failed verification
// (JSON report on `out`), 2 usage error (message on `err`).

#include <ostream>
#include <string>
#include <vector>

namespace cga {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cga
