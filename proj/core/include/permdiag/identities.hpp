#pragma once

#include <functional>
#include <string>
#include <vector>

#include "permdiag/pattern.hpp"

namespace permdiag {

struct IdentityResult {
  std::string name;
  int n = 0;
  std::string expected;
  std::string got;
  bool pass = false;
};

/// "IDENT <name> n=<n> expected=<x> got=<y> PASS|FAIL"
std::string format_line(const IdentityResult& result);

struct IdentityReport {
  std::vector<IdentityResult> results;

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
};

struct IdentityInfo {
  std::string name;
  std::string description;
  /// Largest n the identity is run for, whatever n_max says. Identities that
  /// sweep all of S_n stop early because their cost grows like n!.
  int max_n = 0;
};

/// Every registered identity, in report order.
std::vector<IdentityInfo> identity_catalog();

/// Runs every identity for n = 1..n_max (capped per identity), grouped by n.
/// on_result, when set, sees each line as soon as it is computed.
/// Throws Error{SizeTooLarge} when n_max > cap.
IdentityReport verify_identities(int n_max, int cap = kDefaultEnumerationCap,
                                 const std::function<void(const IdentityResult&)>& on_result = {});

}  // namespace permdiag
