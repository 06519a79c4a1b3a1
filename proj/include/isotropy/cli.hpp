#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace isotropy::cli {

inline constexpr const char* kSchemaVersion = "1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitDomainError = 1,
  kExitUsage = 2,
  kExitDisagreement = 3,
};

/// Runs one command. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace isotropy::cli
