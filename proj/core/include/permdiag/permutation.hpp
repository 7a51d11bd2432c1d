#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace permdiag {

/// A permutation of {1..n} in one-line notation. Positions and values are
/// 1-indexed in every public accessor; the storage is a plain vector.
class Permutation {
 public:
  /// Validates that values is a rearrangement of 1..n with n >= 1.
  /// Throws Error{Empty | OutOfRange | DuplicateValue}.
  static Permutation from_values(std::vector<int> values);

  /// Space-separated decimal values, e.g. "8 9 5 4 6 7 2 3 10 1".
  static Permutation parse(std::string_view text);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(values_.size()); }

  /// Value at 1-based position i.
  int operator()(int i) const { return values_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> values() const noexcept { return values_; }

  bool is_identity() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  explicit Permutation(std::vector<int> values) : values_(std::move(values)) {}

  std::vector<int> values_;
};

Permutation make_permutation(std::span<const int> values);

/// q with q(p(i)) = i.
Permutation inverse(const Permutation& p);

/// Lehmer code: c[i] = #{j > i : p(j) < p(i)}; returned 0-indexed, c[0] is c_1.
std::vector<int> code(const Permutation& p);

/// A (position, value) pair, both 1-based.
struct Entry {
  int position = 0;
  int value = 0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

struct PermStats {
  std::vector<int> descents;
  std::vector<int> excedances;
  std::vector<int> excedance_letters;
  std::vector<Entry> ltr_minima;
  std::vector<Entry> rtl_maxima;
  std::int64_t inversions = 0;
  std::vector<int> code;
};

PermStats statistics(const Permutation& p);

std::vector<int> descents(const Permutation& p);
std::vector<int> excedances(const Permutation& p);
std::vector<Entry> left_to_right_minima(const Permutation& p);
std::vector<Entry> right_to_left_maxima(const Permutation& p);
std::int64_t inversions(const Permutation& p);

/// Values p(i+1) for every descent i.
std::vector<int> descent_bottoms(const Permutation& p);

/// #{i : p(i) = i + 1}.
int shifted_fixed_points(const Permutation& p);

int longest_increasing_length(const Permutation& p);
int longest_decreasing_length(const Permutation& p);

/// Visits every permutation of {1..n} in lexicographic order.
template <typename Visitor>
void for_each_permutation(int n, Visitor&& visit) {
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  do {
    visit(Permutation::from_values(values));
  } while (std::next_permutation(values.begin(), values.end()));
}

}  // namespace permdiag
