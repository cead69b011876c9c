#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace alignrepair {

/// Runs one command line (without the program name). Returns the process exit
/// status; diagnostics go to `err`.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alignrepair
