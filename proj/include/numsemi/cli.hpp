#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace numsemi::cli {

/// Runs one CLI invocation. `args` excludes the program name.
/// Exit status: 0 = success / all checks pass, 1 = counterexample found,
/// 2 = usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace numsemi::cli
