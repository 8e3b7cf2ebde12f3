#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stoptime::cli {

/// Exit codes: predicate holds / success, predicate fails, bad input or usage.
enum ExitCode : int { kSuccess = 0, kPredicateFalse = 1, kInputError = 2 };

/// Runs one command line (without the program name). `in` and `out` stand
/// in for standard input/output when --in/--out are absent.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace stoptime::cli
