#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cubical::cli {

enum Exit { pass = 0, fail = 1, input_error = 2, exhausted = 3 };

/// args excludes the program name. Reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubical::cli
