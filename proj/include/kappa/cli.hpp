#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace kappa::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationFailure = 1,
  kParseFailure = 2,
  kInternalError = 3,
};

/// Environment variable capping the number of candidates `search` examines.
inline constexpr const char* kSearchBoundEnv = "KAPPA_SEARCH_BOUND";

/// Runs one command. `args` excludes the program name, e.g.
/// {"utility", "problem.json", "--json"}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kappa::cli
