#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lfca::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitDomain = 2;

/// Runs one invocation; args excludes the program name. Output goes to `out`
/// unless --out names a file; diagnostics go to `err`.
int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lfca::cli
