#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace minimax::cli {

enum ExitCode { kOk = 0, kMismatch = 1, kUsage = 2 };

/// Refuse enumerations above these sizes unless --force is given.
inline constexpr long long kMaxRecords = 100000;
inline constexpr long long kMaxWork = 2000000;  // #AD * #positive roots

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace minimax::cli
