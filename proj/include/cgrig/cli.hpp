#pragma once

#include <string>
#include <vector>

namespace cgrig {

struct CommandOutput {
    std::string out;
    std::string err;
    /// 0 rigid / sparse / success, 1 flexible / not sparse, 2 input error,
    /// 3 internal-consistency failure.
    int exit_code = 0;
};

/// Runs `cgrig <verb> [options] <file>...` in-process. `args` excludes the
/// program name. Output for several files is concatenated in argument order,
/// each block headed by "# <path>"; the exit code is the largest one seen.
CommandOutput run_command(const std::vector<std::string>& args);

} // namespace cgrig
