#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fullrank::cli {

enum ExitCode : int {
    kOk = 0,
    /// Failed verification, rejected cover, decoding ambiguity, or a found degeneracy.
    kPropertyViolation = 1,
    /// Invalid input, unknown subcommand, or budget refusal.
    kInvalid = 2,
};

/// Full command line, program name first.
int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err);

}  // namespace fullrank::cli
