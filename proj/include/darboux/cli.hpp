#pragma once

#include <iosfwd>

namespace darboux {

/// Entry point of the `darboux` command-line tool.  Exit status: 0 for
/// analysis results (negative findings included), 1 for input and flag
/// errors, 2 for internal invariant violations.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace darboux
