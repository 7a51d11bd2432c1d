#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "permdiag/permutation.hpp"

namespace permdiag {

/// Largest n enumerate_avoiders accepts unless the caller raises it.
inline constexpr int kDefaultEnumerationCap = 11;

/// Number of index subsequences of p order-isomorphic to pattern. Exhaustive
/// search over subsequences (branches that already break the relative order
/// are pruned; every candidate is still visited). This is the oracle the
/// diagram-based criteria are checked against.
std::uint64_t occurrences(const Permutation& p, const Permutation& pattern);

bool contains_pattern(const Permutation& p, const Permutation& pattern);

bool avoids(const Permutation& p, const Permutation& pattern);
bool avoids(const Permutation& p, std::span<const Permutation> patterns);

/// Filters S_n. Throws Error{SizeTooLarge} when n > cap.
std::vector<Permutation> enumerate_avoiders(int n, std::span<const Permutation> patterns,
                                            int cap = kDefaultEnumerationCap);

template <typename Visitor>
void for_each_avoider(int n, std::span<const Permutation> patterns, Visitor&& visit,
                      int cap = kDefaultEnumerationCap);

/// Commonly used patterns.
Permutation pattern_132();
Permutation pattern_321();
/// k(k-1)...1
Permutation decreasing_pattern(int k);
/// 12...k
Permutation increasing_pattern(int k);
/// 213...k
Permutation two_one_three_pattern(int k);
/// s(s+1)...k 1 2 ... (s-1), for 1 <= s <= k.
Permutation shifted_pattern(int s, int k);

void check_enumeration_size(int n, int cap);

template <typename Visitor>
void for_each_avoider(int n, std::span<const Permutation> patterns, Visitor&& visit, int cap) {
  check_enumeration_size(n, cap);
  for_each_permutation(n, [&](const Permutation& p) {
    if (avoids(p, patterns)) visit(p);
  });
}

}  // namespace permdiag
