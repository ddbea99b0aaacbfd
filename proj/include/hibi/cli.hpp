#pragma once

#include <iosfwd>

namespace hibi {

/// Runs the command-line front end. Results go to out as one JSON object,
/// diagnostics to err. Returns the process exit code:
/// 0 ok, 2 parse/usage error, 3 lattice too large, 4 not a chain,
/// 5 not homogeneous, 6 internal consistency failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hibi
