#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsync {

/// Command-line front end; exposed as a function so tests can drive it
/// in-process. Exit codes: 0 = decision yes / success, 1 = decision no,
/// 2 = input error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wsync
