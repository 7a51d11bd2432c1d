#pragma once

#include "permdiag/partition.hpp"
#include "permdiag/permutation.hpp"

namespace permdiag {

enum class AvoidanceKind {
  Decreasing,   ///< k(k-1)...1
  Increasing,   ///< 12...k
  TwoOneThree,  ///< 213...k
};

Permutation pattern_for(AvoidanceKind kind, int k);

/// Decides avoidance of the kind's length-k pattern from the diagram of a
/// 132-avoider alone:
///   Decreasing  -> at most k-2 corners
///   Increasing  -> partition contains the staircase (n+1-k, ..., 1)
///   TwoOneThree -> every corner (i,j) has i + j >= n + 3 - k
/// Throws Error{Not132Avoiding} or Error{BadK} (k < 3).
bool diagram_avoidance_check(const Permutation& p, int k, AvoidanceKind kind);

/// Drops the corners of D lying on the staircase (n+1-k, ..., 1), keeping
/// those with i + j >= n + 3 - k. D must lie in Y_n and contain the staircase.
/// Throws Error{PreconditionViolated} or Error{BadK}.
Partition staircase_union_forward(const Partition& d, int n, int k);

/// Union with the staircase (n+1-k, ..., 1). Every corner of d must satisfy
/// i + j >= n + 3 - k. Throws Error{PreconditionViolated} or Error{BadK}.
Partition staircase_union_inverse(const Partition& d, int n, int k);

}  // namespace permdiag
