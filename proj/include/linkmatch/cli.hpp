#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace linkmatch::cli {

inline constexpr const char* kToolName = "linkmatch";
inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInput = 2,           // unreadable file or malformed instance
  kCounterexample = 3,  // only under --strict
  kBugSuspect = 4,      // a proven statement failed, or an internal check did
};

// Exit status for a run that found the given numbers of counterexamples and
// failures of proven statements.
int outcome_code(long counterexamples, long bug_suspects, bool strict);

// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace linkmatch::cli
