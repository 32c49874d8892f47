#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace totred::cli {

enum ExitCode : int {
    exit_ok = 0,
    exit_input_error = 2,
    exit_singular = 3,
    exit_identity_failure = 4,
};

/// Entry point of the totred tool; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace totred::cli
