#pragma once

#include <iosfwd>

namespace ltpair::cli {

/// Runs one command line.  JSON goes to `out`, diagnostics to `err`.
/// Returns 0 on success, 1 when a check fails, 2 on a usage error.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ltpair::cli
