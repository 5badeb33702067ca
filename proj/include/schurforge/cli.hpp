#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace schurforge::cli {

/// Runs one command line (without the program name). Returns the exit code:
/// 2 for malformed input or any library error, 1 when a verification check
/// fails, 0 otherwise.
int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err);

} // namespace schurforge::cli
