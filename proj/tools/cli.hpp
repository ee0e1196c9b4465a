#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gehrhart::cli {

enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kInputError = 2,
};

/// Runs one subcommand; JSON goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gehrhart::cli
