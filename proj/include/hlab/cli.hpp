#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hlab {

/// Exit codes of the hlab tool.
enum ExitCode : int { kExitOk = 0, kExitInput = 1, kExitDomain = 2 };

/// Runs `hlab <args...>` writing to the given streams. args excludes the
/// program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hlab
