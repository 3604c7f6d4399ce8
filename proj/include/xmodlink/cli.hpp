#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace xmodlink {

// Runs the command line given argv-style arguments (without the program
// name). Returns 0 on success, 1 on a failed check, 2 on usage or IO errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace xmodlink
