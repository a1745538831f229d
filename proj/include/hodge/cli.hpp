#pragma once

#include <iosfwd>

namespace hodge {

/// Entry point of the `hodge` command. Exit status: 0 when every check passes, 1 for a failed
/// check or an invariant violation (the first one is named on stderr), 2 for input errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hodge
