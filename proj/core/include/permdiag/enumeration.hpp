#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permdiag/partition.hpp"
#include "permdiag/pattern.hpp"
#include "permdiag/permutation.hpp"

namespace permdiag {

using BigInt = boost::multiprecision::cpp_int;

/// 0 when k < 0 or k > n.
BigInt binomial(int n, int k);
BigInt catalan(int n);
/// (1/n) C(n,k) C(n,k-1), the number of 132-avoiders with k-1 descents.
BigInt narayana(int n, int k);
/// C(n+k, n) - C(n+k, n+1).
BigInt ballot(int n, int k);
/// Partitions of Y_n with Durfee rank k: ((n+1-2k) C(n,k) / (n+1-k))^2.
/// Throws Error{BadArgs} unless 0 <= k <= n/2.
BigInt rank_count(int n, int k);
/// q(n,k) = q(n-1,k-1) + q(n-1,k), q(n,0) = 1, zero past n/2.
/// Throws Error{BadArgs} unless 0 <= k <= n/2.
BigInt q_triangle(int n, int k);
/// (1/n) sum_{i=1}^{k-1} C(n,i) C(n,i-1): size of S_n(132, k...1).
BigInt decreasing_avoider_formula(int n, int k);

/// Dispatch by name: catalan(n), narayana(n,k), ballot(n,k), rank_count(n,k),
/// q_triangle(n,k). Throws Error{BadArgs} for an unknown name or arity.
BigInt closed_form(std::string_view name, std::span<const int> args);

/// Counts per statistic value.
class StatisticTable {
 public:
  void add(int value, std::uint64_t count = 1);
  void merge(const StatisticTable& other);
  std::uint64_t count(int value) const;
  std::uint64_t total() const noexcept { return total_; }
  const std::map<int, std::uint64_t>& counts() const noexcept { return counts_; }
  /// "{0:1,1:6,2:6,3:1}"
  std::string to_string() const;
  friend bool operator==(const StatisticTable&, const StatisticTable&) = default;

 private:
  std::map<int, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

enum class Statistic {
  Des,
  Exc,
  Returns,     ///< returns of psi_k (132-avoiders) or psi_bjs (321-avoiders)
  DurfeeRank,  ///< Durfee rank of the diagram; 132-avoiders only
  RtlMaxima,
  FixedShift,  ///< #{i : p(i) = i + 1}
};

std::string_view to_string(Statistic stat);
/// Throws Error{BadArgs}.
Statistic parse_statistic(std::string_view name);
int evaluate(Statistic stat, const Permutation& p);

/// Distribution of stat over S_n(patterns), by full enumeration.
/// Throws Error{SizeTooLarge} when n > cap.
StatisticTable distribution(int n, std::span<const Permutation> patterns, Statistic stat,
                            int cap = kDefaultEnumerationCap);
/// Same, over an already enumerated class.
StatisticTable distribution(std::span<const Permutation> members, Statistic stat);

enum class PartitionStatistic {
  Corners,
  DiagonalCorners,  ///< corners on i + j = n
  DurfeeRank,
};

std::string_view to_string(PartitionStatistic stat);
/// Throws Error{BadArgs}.
PartitionStatistic parse_partition_statistic(std::string_view name);

/// Distribution over Y_n.
StatisticTable partition_distribution(int n, PartitionStatistic stat);

}  // namespace permdiag
