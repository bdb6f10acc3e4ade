#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cluster::cli {

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2, kTruncated = 3 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cluster::cli
