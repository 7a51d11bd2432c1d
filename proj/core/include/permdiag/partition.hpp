#pragma once

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permdiag {

/// A cell of an n x n array in matrix convention: row 1 on top, column 1 on
/// the left.
struct Cell {
  int row = 0;
  int col = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// stripped on construction, so two partitions that differ only by zero
/// padding compare equal.
class Partition {
 public:
  Partition() = default;

  /// Throws Error{BadArgs} on a negative or increasing entry.
  static Partition from_parts(std::vector<int> parts);

  /// "[7,7,4,3,3,3,1,1,1]"; the empty partition is "[]".
  static Partition parse(std::string_view text);

  /// (m, m-1, ..., 1); empty when m <= 0.
  static Partition staircase(int m);

  /// lambda_i for 1-based i, 0 past the last positive part.
  int part(int i) const noexcept {
    return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0;
  }

  /// Number of positive parts.
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int weight() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }

  std::span<const int> parts() const noexcept { return parts_; }

  /// Parts padded with zeros (or truncated) to exactly len entries.
  std::vector<int> padded(int len) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

/// Largest i with lambda_i >= i.
int durfee_rank(const Partition& lambda);

/// Cells (i, lambda_i) with lambda_i > lambda_{i+1}, top to bottom.
std::vector<Cell> corners(const Partition& lambda);

/// The partition whose corners are exactly the given cells. Rows must be
/// strictly increasing and columns strictly decreasing (Error{BadArgs}).
Partition partition_from_corners(std::span<const Cell> corner_cells);

/// lambda_i <= n - i for every i, i.e. lambda lies in Y_n.
bool fits_staircase(const Partition& lambda, int n);

/// outer_i >= inner_i for every i.
bool contains(const Partition& outer, const Partition& inner);

/// Lazily walks Y_n in lexicographic order of part lists, starting with the
/// empty partition. Single consumer.
class StaircasePartitions {
 public:
  explicit StaircasePartitions(int n);

  std::optional<Partition> next();

 private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<int> current_;
};

std::vector<Partition> staircase_partitions(int n);

template <typename Visitor>
void for_each_staircase_partition(int n, Visitor&& visit) {
  StaircasePartitions stream(n);
  while (auto lambda = stream.next()) visit(*lambda);
}

}  // namespace permdiag
