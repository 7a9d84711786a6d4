#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace consonoscope::cli {

// Parses `args` (without the program name), runs the chosen subcommand and
// writes its files. Returns 0 on success, 2 on usage errors and 1 when the
// computation itself fails. Diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace consonoscope::cli
