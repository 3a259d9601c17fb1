#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qew {

/// Run the qew command line: args excludes the program name. Output goes to
/// out, diagnostics to err; returns the process exit code.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace qew
