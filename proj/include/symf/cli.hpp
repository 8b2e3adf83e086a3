#pragma once

#include <string>
#include <vector>

namespace symf::cli {

struct CommandResult {
    int exit_code = 0;
    std::string output;  // stdout payload; diagnostics included on failure
};

// Exit codes: 0 ok, 1 mismatch or failed case, 2 usage error,
// 3 internal assertion failure.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace symf::cli
