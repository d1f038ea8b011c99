#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lieherm {

/// Dispatches one CLI invocation. args excludes the program name.
/// Writes a single JSON document to out, diagnostics to err.
/// Returns 0 (ok), 1 (validation error) or 2 (math precondition error).
int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err);

} // namespace lieherm
