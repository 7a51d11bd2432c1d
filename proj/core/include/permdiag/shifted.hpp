#pragma once

#include <map>
#include <vector>

#include "permdiag/partition.hpp"
#include "permdiag/permutation.hpp"

namespace permdiag {

/// Height data of a 132-avoider with diagram lambda (n = p.size()):
///   a_i     = n - (i + lambda_i),   i = 1..length(lambda)
///   a_bar_i = n - (i + lambda_i),   i = 1..n-1 (lambda padded with zeros)
///   b_i     = n - (i + lambda'_i),  i = 1..lambda_1
///   h_i     = longest strictly increasing subsequence of
///             b_{lambda_i}, b_{lambda_i - 1}, ..., b_1 that starts at b_{lambda_i}
/// All sequences are stored 0-indexed.
struct ABHProfile {
  Partition lambda;
  std::vector<int> a;
  std::vector<int> a_bar;
  std::vector<int> b;
  std::vector<int> h;
};

/// Throws Error{Not132Avoiding}.
ABHProfile abh_profile(const Permutation& p);

/// l_s(p): the largest l such that p contains s(s+1)...l 1 2 ... (s-1),
/// computed from the a/h profile as s-1 plus the longest strictly decreasing
/// subsequence of a whose last entry has height >= s-1 (s-1 when there is
/// none). Throws Error{Not132Avoiding} or Error{BadS} (s < 2).
int shifted_length(const Permutation& p, int s);

/// Diagram criterion for avoiding s(s+1)...k 1 2 ... (s-1); needs k >= 3 and
/// 2 <= s <= k. Throws Error{BadK}, Error{BadS} or Error{Not132Avoiding}.
bool avoids_shifted_by_diagram(const Permutation& p, int s, int k);

struct ShiftedProfile {
  /// s -> l_s(p) for s = 2..n.
  std::map<int, int> l_values;
  /// (l_2 - 1, l_3 - 2, ...)
  Partition L;
};

ShiftedProfile shifted_profile(const Permutation& p);

/// Length of a longest increasing subsequence of the 132-avoider with
/// diagram lambda: max over i = 1..n of n + 1 - i - lambda_i.
int longest_increasing_from_partition(const Partition& lambda, int n);

/// Bijection on Y_n carrying the longest-increasing length l of
/// permutation_from_partition(lambda) to l_s of
/// permutation_from_partition(mu_map(lambda)) whenever l >= s-1.
/// Throws Error{DoesNotFitStaircase} or Error{BadS} (s < 2).
Partition mu_map(const Partition& lambda, int n, int s);
Partition mu_map_inverse(const Partition& mu, int n, int s);

/// The entries produced by the case split on lambda_i + i followed by the
/// interchange-and-increment pass, before any final normalisation. Length n-1.
std::vector<int> interchange_sequence(const Partition& lambda, int n, int s);

}  // namespace permdiag
