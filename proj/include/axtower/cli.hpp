#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace axtower {

/// Runs one command line (without the program name). Exit status: 0 success,
/// 1 domain error, 2 parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace axtower
