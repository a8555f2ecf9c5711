#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace curvode {

// Command-line front end. Exit codes: 0 success, 1 mathematical falsification,
// 2 usage error, 3 symbolic-expansion cap exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace curvode
