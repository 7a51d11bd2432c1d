#include "permdiag/characterization.hpp"

#include <algorithm>

#include "permdiag/diagram.hpp"
#include "permdiag/error.hpp"
#include "permdiag/pattern.hpp"

namespace permdiag {

namespace {

void check_k(int k) {
  if (k < 3) throw Error(ErrorCode::BadK, "k must be at least 3");
}

bool all_corners_clear(const Partition& d, int n, int k) {
  const auto cs = corners(d);
  return std::all_of(cs.begin(), cs.end(), [&](Cell c) { return c.row + c.col >= n + 3 - k; });
}

}  // namespace

Permutation pattern_for(AvoidanceKind kind, int k) {
  switch (kind) {
    case AvoidanceKind::Decreasing: return decreasing_pattern(k);
    case AvoidanceKind::Increasing: return increasing_pattern(k);
    case AvoidanceKind::TwoOneThree: return two_one_three_pattern(k);
  }
  throw Error(ErrorCode::BadArgs, "unknown avoidance kind");
}

bool diagram_avoidance_check(const Permutation& p, int k, AvoidanceKind kind) {
  check_k(k);
  if (!avoids(p, pattern_132())) throw Error(ErrorCode::Not132Avoiding, p.to_string() + " contains 132");
  const Partition lambda = require_dominant_partition(p);
  const int n = p.size();
  switch (kind) {
    case AvoidanceKind::Decreasing:
      return static_cast<int>(corners(lambda).size()) <= k - 2;
    case AvoidanceKind::Increasing:
      return contains(lambda, Partition::staircase(n + 1 - k));
    case AvoidanceKind::TwoOneThree:
      return all_corners_clear(lambda, n, k);
  }
  throw Error(ErrorCode::BadArgs, "unknown avoidance kind");
}

Partition staircase_union_forward(const Partition& d, int n, int k) {
  check_k(k);
  if (!fits_staircase(d, n) || !contains(d, Partition::staircase(n + 1 - k))) {
    throw Error(ErrorCode::PreconditionViolated,
                d.to_string() + " must lie in Y_n and contain the staircase of length n+1-k");
  }
  std::vector<Cell> kept;
  for (Cell c : corners(d)) {
    if (c.row + c.col >= n + 3 - k) kept.push_back(c);
  }
  return partition_from_corners(kept);
}

Partition staircase_union_inverse(const Partition& d, int n, int k) {
  check_k(k);
  if (!fits_staircase(d, n) || !all_corners_clear(d, n, k)) {
    throw Error(ErrorCode::PreconditionViolated,
                d.to_string() + " must lie in Y_n with every corner on or beyond i+j = n+3-k");
  }
  const Partition stair = Partition::staircase(n + 1 - k);
  const int len = std::max(d.length(), stair.length());
  std::vector<int> parts;
  for (int i = 1; i <= len; ++i) parts.push_back(std::max(d.part(i), stair.part(i)));
  return Partition::from_parts(std::move(parts));
}

}  // namespace permdiag
