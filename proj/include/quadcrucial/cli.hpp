#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "quadcrucial/padic.hpp"

namespace quadcrucial::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kConsistencyFailure = 2 };

/// Runs one command line. `args` excludes the program name. JSON or the table goes to `out`,
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parameter values for a sweep axis: "a:b:step" (inclusive, step > 0) or "x,y,z".
/// Sorted and deduplicated.
std::vector<Rat> expand_range(const std::string& text);

}  // namespace quadcrucial::cli
