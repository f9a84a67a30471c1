#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace coprimes::cli {

/// Dispatches one command-line invocation (without the program name).
/// Payload goes to `out`, diagnostics to `err`. Returns 0 on success, 1 when
/// `verify` finds a discrepancy, 2 on usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace coprimes::cli
