#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcournot {

// Runs one command given the argument list (program name excluded). The
// rendering goes to `out` unless --out redirects it to a file; diagnostics go
// to `err`. Returns the process exit code: 0 on success, 2 on configuration
// or usage errors, 3 on runtime domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcournot
