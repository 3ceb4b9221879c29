#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace liecurv::cli {

/// Runs the command-line tool in-process. `args` excludes the program name.
/// Returns the process exit code: 0 success, 1 input/validation error,
/// 2 internal fault.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace liecurv::cli
