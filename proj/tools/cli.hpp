#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locdom::cli {

/// Exit codes of the locdom tool.
enum ExitCode : int {
    kOk = 0,
    kCheckFailed = 1,  // a checked property failed; counterexamples were printed
    kUsage = 2,        // bad arguments, unreadable or malformed input
};

/// Runs the tool; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace locdom::cli
