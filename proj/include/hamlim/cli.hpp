#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hamlim {

// Parses argv-style arguments and runs one subcommand, writing reports to
// `out` and diagnostics to `err`. Returns 0 on success, 1 when a checked
// claim fails, 2 on usage, file, or domain errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hamlim
