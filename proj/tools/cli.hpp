#pragma once

// Entry point of the `macs` tool, kept out of main() so the test suite can
// drive it in-process against string streams.

#include <iosfwd>
#include <string>
#include <vector>

namespace macs::cli {

enum ExitCode : int {
    kOk = 0,
    kPropertyFailure = 1,
    kDisagreement = 2,
    kUsage = 3,
    kNonCanonical = 4,
};

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// MACS_MAX_ENUM if set (must be a positive integer), else the library default.
int enumeration_guard();

} // namespace macs::cli
