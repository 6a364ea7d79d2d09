#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chevalley {

// Dispatches one command line (without the program name). Output goes to
// `out`, diagnostics to `err`. Returns 0 on success, 1 when a verification
// run finds a non-erratum mismatch, 2 on usage or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace chevalley
