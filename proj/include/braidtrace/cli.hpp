// Command-line front end.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace braidtrace {

// Run the tool on the given arguments (program name excluded).  Writes
// the report to `out` (or to the file named by --out) and error
// messages to `err`.  Exit status: 0 on success, 1 when a distinguish
// or invert verdict is Distinguished, 2 on input errors.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace braidtrace
