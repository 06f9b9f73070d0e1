#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace permstat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Entry point for the `permstat` tool; `args` excludes the program name.
/// Subcommands: metrics, extremal, construct, verify, sample, improve.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace permstat::cli
