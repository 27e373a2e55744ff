#pragma once

#include <iosfwd>

namespace h2u {

// Run the embedded regression suite (printed one check per line); returns
// the number of failed checks.
int run_selftest(std::ostream& out);

}  // namespace h2u
