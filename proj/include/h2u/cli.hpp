#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace h2u::cli {

// Dispatch a full command line (without the program name).  Returns the
// process exit code: 0 success, 1 usage, 2 domain error, 3 internal
// assertion, 4 I/O.  Reports go to `out`, diagnostics to `err`.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace h2u::cli
