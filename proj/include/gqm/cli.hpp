#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace gqm::cli {

inline constexpr std::string_view kVersion = "1.0.0";

/// Exit codes: 0 all requested checks passed, 1 a check failed, 2 bad input.
enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

/// Runs one invocation. `args` excludes the program name. Output is
/// byte-stable for identical arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gqm::cli
