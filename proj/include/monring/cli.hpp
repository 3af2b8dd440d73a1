#ifndef MONRING_CLI_HPP
#define MONRING_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace monring::cli {

// Runs one CLI invocation (without the program name). Returns the exit
// status: 0 success, 1 user error (bad input, parse failure), 2 broken
// internal invariant.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace monring::cli

#endif
