#pragma once

// Command-line front end. Exit status: 0 pass, 1 fail, 2 inconclusive or not
// applicable, 3 input error.

#include <ostream>
#include <string>
#include <vector>

namespace hcot {

/// Runs one command line; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hcot
