#pragma once

#include <string>
#include <vector>

namespace ordfield {

struct CommandResult {
    int exit_code = 0;
    std::string out;
    std::string err;
};

// One CLI invocation, argv without the program name.
// Exit codes: 0 success, 1 domain error (division by zero, truncation
// ambiguity, infinite standard part, ...), 2 usage or parse error.
CommandResult run_command(const std::vector<std::string>& argv);

}  // namespace ordfield
