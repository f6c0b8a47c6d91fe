#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace g2calc::cli {

/// Runs one g2calc command line (without the program name). Returns the exit
/// code: 0 success, 1 failed verification, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace g2calc::cli
