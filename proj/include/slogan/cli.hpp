#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace slogan::cli {

// Runs one subcommand. `args` excludes the program name. Returns 0 on
// success, 1 on validation errors and bad usage, 2 on I/O and backend
// failures. Diagnostics and the resolved configuration go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace slogan::cli
