#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crownlab::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kResource = 3,
};

/// Runs one command line. `args` excludes the program name. JSON (or CSV for
/// sweep) goes to `out`; summaries and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "3..5" -> {3,4,5}; "4" -> {4}; "3,5,7" -> {3,5,7}.
std::vector<int> parse_range(const std::string& text);

}  // namespace crownlab::cli
