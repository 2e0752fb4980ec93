#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace trendclass {

/// Runs one CLI invocation. args[0] is the program name. Returns the
/// process exit status; diagnostics go to `err` as a single line.
int run_pipeline(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                 std::ostream& err);

} // namespace trendclass
