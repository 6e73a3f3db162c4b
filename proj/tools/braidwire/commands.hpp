#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace braidwire::tools {

// Runs the command line (without the program name). Exit codes: 0 success,
// 1 domain error with a JSON reason on stdout, 2 usage error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace braidwire::tools
