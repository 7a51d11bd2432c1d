#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace permdiag::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. args excludes the program name. Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// PERMDIAG_NMAX if set, the library default otherwise. nullopt when the
/// variable is set but not a positive integer.
std::optional<int> enumeration_cap_from_env();

}  // namespace permdiag::cli
