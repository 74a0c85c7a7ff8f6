#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace screw::cli {

enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1,
    kMalformedInput = 2,
    kDomainError = 3,
};

/// Runs the command line (without the program name). Reports go to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CheckResult {
    std::string name;
    bool passed;
    double worst;      // largest observed deviation
    double tolerance;
};

/// Identity suite behind the `selfcheck` subcommand.
std::vector<CheckResult> selfcheck(std::uint64_t seed = 20240601);

}  // namespace screw::cli
