#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace supertrop::cli {

enum ExitCode : int { kOk = 0, kDomain = 1, kParse = 2, kCounterexample = 3 };

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace supertrop::cli
