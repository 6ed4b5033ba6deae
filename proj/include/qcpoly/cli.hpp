#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcpoly::cli {

/// Run the command line given argv minus the program name. Returns the
/// process exit code: 0 on success, 1 on a domain error (or a failed
/// verify), 2 on a usage error. All human output goes to the given
/// streams.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qcpoly::cli
