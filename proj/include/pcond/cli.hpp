#pragma once

// Command-line front end.  Exit codes: 0 all checks pass, 1 a check failed,
// 2 data error (schema, invariant or I/O), 3 usage error.

#include <ostream>
#include <string>
#include <vector>

namespace pcond::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kDataError = 2, kUsageError = 3 };

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pcond::cli
