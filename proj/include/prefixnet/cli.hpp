#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace prefixnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 2;
inline constexpr int kExitUsage = 64;

/// Tool version string echoed in every output header.
const std::string& tool_version();

/// Runs one invocation. `args` excludes the program name. Results go to
/// `out`; diagnostics (one line) go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace prefixnet::cli
