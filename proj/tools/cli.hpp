#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hedgesim::cli {

/// Runs one command line. Reports go to `out` unless --out names a file;
/// diagnostics go to `err`. Returns 0 on success, 1 on runtime errors and
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hedgesim::cli
