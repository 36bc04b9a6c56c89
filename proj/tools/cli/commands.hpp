#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace onerule::cli {

// 0: answered, 1: domain-level refusal, 2: input error.
enum ExitCode : int { kAnswered = 0, kRefused = 1, kInputError = 2 };

// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace onerule::cli
