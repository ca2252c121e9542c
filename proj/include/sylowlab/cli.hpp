#pragma once

#include <ostream>

namespace sylowlab {

/// Entry point of the `sylowlab` tool. Data goes to `out`, progress and
/// diagnostics to `err`. Returns 0 on success, 1 on a violation or
/// counterexample, 2 on usage, input or cap errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sylowlab
