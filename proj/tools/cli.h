#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fscsynth::cli {

inline constexpr char const* kVersion = "0.1.0";

enum ExitCode : int {
    kSuccess = 0,      // success or specification satisfied
    kUnsatisfied = 1,  // completed, specification not met or not proven
    kInputError = 2,
    kBudgetExhausted = 3,
};

/// Runs the command line `args` (without the program name).
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace fscsynth::cli
