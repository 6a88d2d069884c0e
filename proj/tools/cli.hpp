#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace harmsum::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,  // identity failure or bound violation
    kUsage = 2,
};

/// Runs the command line `args` (args[0] is the program name). Results go to
/// `out`, diagnostics and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace harmsum::cli
