#pragma once

// Command-line front end. run() is the whole program minus process setup,
// so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace itx::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2 };

/// args excludes the program name. Reports go to `out` (or --output),
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace itx::cli
