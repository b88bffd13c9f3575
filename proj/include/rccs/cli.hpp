#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rccs {

/// Runs one command line (without the program name). Exit codes: 0 success or
/// equivalent, 1 distinguished or invalid, 2 usage or input error.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace rccs
