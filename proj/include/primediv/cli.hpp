#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace primediv::cli {

/// Exit codes: 0 success, 1 usage error, 2 contract violation (degenerate
/// recurrence, failed cross-check, ...).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace primediv::cli
