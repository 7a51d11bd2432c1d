#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "permdiag/partition.hpp"
#include "permdiag/permutation.hpp"

namespace permdiag {

enum class Step : std::uint8_t { Up, Down };

/// 2n unit steps from (0,0) to (2n,0) that never dip below the axis.
class DyckPath {
 public:
  /// Throws Error{Unbalanced | BelowAxis | Empty}.
  static DyckPath from_steps(std::vector<Step> steps);

  /// String over {U, D}, e.g. "UUDD".
  static DyckPath parse(std::string_view text);

  /// U^n D^n
  static DyckPath pyramid(int n);
  /// (UD)^n
  static DyckPath zigzag(int n);

  int half_length() const noexcept { return static_cast<int>(steps_.size() / 2); }
  std::span<const Step> steps() const noexcept { return steps_; }

  std::string to_string() const;

  friend bool operator==(const DyckPath&, const DyckPath&) = default;
  friend auto operator<=>(const DyckPath&, const DyckPath&) = default;

 private:
  explicit DyckPath(std::vector<Step> steps) : steps_(std::move(steps)) {}

  std::vector<Step> steps_;
};

struct HeightProfile {
  /// w[i-1] is the height where step i starts, i = 1..2n.
  std::vector<int> w;
  std::int64_t sum_all = 0;
  std::int64_t sum_down = 0;
  /// Down-steps that land on the axis.
  int returns = 0;
  /// w_{n+1}.
  int rank_height = 0;
};

HeightProfile heights(const DyckPath& path);

/// Height reached after the i-th down-step, i = 1..n, returned 0-indexed.
std::vector<int> down_step_end_heights(const DyckPath& path);

/// Maximal peak height.
int max_height(const DyckPath& path);

/// Billey-Jockusch-Stanley path of a 321-avoider. Throws Error{Not321Avoiding}.
DyckPath psi_bjs(const Permutation& p);
Permutation psi_bjs_inverse(const DyckPath& path);

/// Krattenthaler path of a 132-avoider. Throws Error{Not132Avoiding}.
DyckPath psi_k(const Permutation& p);
Permutation psi_k_inverse(const DyckPath& path);

/// The Young diagram cut out between the wedge (0,0)-(n,n)-(2n,0) and the
/// path, read with north-west to south-east diagonals as columns:
/// lambda_i = n - i - (height after the i-th down-step).
Partition path_partition(const DyckPath& path);

/// Inverse of path_partition. Throws Error{DoesNotFitStaircase}.
DyckPath partition_path(const Partition& lambda, int n);

}  // namespace permdiag
