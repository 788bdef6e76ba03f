#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace umbral::cli {

/// Exit codes of the command-line tool.
enum ExitCode : int {
    exit_ok = 0,
    exit_check_failed = 1,
    exit_usage = 2,
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace umbral::cli
