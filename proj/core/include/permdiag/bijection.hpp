#pragma once

#include <span>
#include <vector>

#include "permdiag/partition.hpp"
#include "permdiag/permutation.hpp"

namespace permdiag {

/// Corners (i_k, n+1-p(i_k)) over the excedances i_k of p.
std::vector<Cell> excedance_corners(const Permutation& p);

/// Row by row, the dot goes into the leftmost free column right of the
/// diagram row: the unique 132-avoider whose diagram is lambda.
/// Throws Error{DoesNotFitStaircase} unless lambda lies in Y_n.
Permutation permutation_from_partition(const Partition& lambda, int n);

/// The 132-avoider with the given left-to-right minima: every other value a,
/// taken in increasing order, goes to the leftmost free position right of a-1.
/// Throws Error{MalformedMinima} or Error{Unfillable}.
Permutation fill_from_minima(std::span<const Entry> minima, int n);

/// S_n(321) -> S_n(132): excedances -> corners -> partition -> permutation.
/// Throws Error{Not321Avoiding}.
Permutation phi(const Permutation& p);

/// Throws Error{Not132Avoiding}.
Permutation phi_inverse(const Permutation& sigma);

/// The 321-avoider with prescribed excedances (1-based positions) and
/// excedance letters; remaining values fill the remaining positions in
/// increasing order. Throws Error{BadArgs} when the data is inconsistent.
Permutation permutation_from_excedances(int n, std::span<const int> positions, std::span<const int> letters);

}  // namespace permdiag
