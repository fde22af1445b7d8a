#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majority::cli {

// Runs one subcommand (args exclude the program name) and writes the report
// to `out`, diagnostics to `err`. Exit codes: 0 success, 1 enumeration
// budget or search bound exceeded, 2 parse/validation/usage error.
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace majority::cli
