#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mzv::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mzv::cli
