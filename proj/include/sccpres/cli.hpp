#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sccp::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kUsage = 2,
  kCapability = 3,
};

/// Runs `scc-preserve` with args (args[0] is the program name).  Machine
/// output goes to `out`, human-readable summaries to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sccp::cli
