#ifndef TORIC_CLI_HPP
#define TORIC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

// Runs one CLI invocation (argv without the program name). Exit codes:
// 0 success, 1 verification assertion failed, 2 input error, 3 guard
// exceeded, 4 I/O error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli

#endif
