#include "permdiag/enumeration.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "permdiag/diagram.hpp"
#include "permdiag/dyck.hpp"
#include "permdiag/error.hpp"

namespace permdiag {

namespace {

void check_rank_args(int n, int k) {
  if (n < 0 || k < 0 || k > n / 2) {
    throw Error(ErrorCode::BadArgs, "need 0 <= k <= n/2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

void expect_arity(std::string_view name, std::span<const int> args, std::size_t arity) {
  if (args.size() != arity) {
    throw Error(ErrorCode::BadArgs,
                std::string(name) + " takes " + std::to_string(arity) + " argument(s), got " + std::to_string(args.size()));
  }
}

}  // namespace

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt catalan(int n) {
  if (n < 0) throw Error(ErrorCode::BadArgs, "catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

BigInt narayana(int n, int k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return binomial(n, k) * binomial(n, k - 1) / n;
}

BigInt ballot(int n, int k) {
  if (n < 0 || k < 0) return 0;
  return binomial(n + k, n) - binomial(n + k, n + 1);
}

BigInt rank_count(int n, int k) {
  check_rank_args(n, k);
  const BigInt numerator = BigInt(n + 1 - 2 * k) * binomial(n, k);
  const int denominator = n + 1 - k;
  if (numerator % denominator != 0) {
    throw Error(ErrorCode::PreconditionViolated, "rank_count quotient is not integral");
  }
  const BigInt root = numerator / denominator;
  return root * root;
}

BigInt q_triangle(int n, int k) {
  check_rank_args(n, k);
  // Row by row; row m has entries 0..m/2.
  std::vector<BigInt> row{1};
  for (int m = 1; m <= n; ++m) {
    std::vector<BigInt> next(static_cast<std::size_t>(m / 2 + 1));
    next[0] = 1;
    for (int j = 1; j <= m / 2; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      next[ju] = row[ju - 1] + (ju < row.size() ? row[ju] : BigInt(0));
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

BigInt decreasing_avoider_formula(int n, int k) {
  if (n < 1) throw Error(ErrorCode::BadArgs, "need n >= 1");
  BigInt sum = 0;
  for (int i = 1; i <= k - 1; ++i) sum += binomial(n, i) * binomial(n, i - 1);
  return sum / n;
}

BigInt closed_form(std::string_view name, std::span<const int> args) {
  if (name == "catalan") {
    expect_arity(name, args, 1);
    return catalan(args[0]);
  }
  if (name == "narayana") {
    expect_arity(name, args, 2);
    return narayana(args[0], args[1]);
  }
  if (name == "ballot") {
    expect_arity(name, args, 2);
    return ballot(args[0], args[1]);
  }
  if (name == "rank_count") {
    expect_arity(name, args, 2);
    return rank_count(args[0], args[1]);
  }
  if (name == "q_triangle") {
    expect_arity(name, args, 2);
    return q_triangle(args[0], args[1]);
  }
  throw Error(ErrorCode::BadArgs, "unknown closed form '" + std::string(name) + "'");
}

void StatisticTable::add(int value, std::uint64_t count) {
  counts_[value] += count;
  total_ += count;
}

void StatisticTable::merge(const StatisticTable& other) {
  for (const auto& [value, count] : other.counts_) add(value, count);
}

std::uint64_t StatisticTable::count(int value) const {
  auto it = counts_.find(value);
  return it == counts_.end() ? 0 : it->second;
}

std::string StatisticTable::to_string() const {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [value, count] : counts_) {
    if (!first) out << ",";
    first = false;
    out << value << ':' << count;
  }
  out << '}';
  return out.str();
}

namespace {

constexpr std::array<std::pair<Statistic, std::string_view>, 6> kStatisticNames{{
    {Statistic::Des, "des"},
    {Statistic::Exc, "exc"},
    {Statistic::Returns, "returns"},
    {Statistic::DurfeeRank, "durfee_rank"},
    {Statistic::RtlMaxima, "rtl_maxima"},
    {Statistic::FixedShift, "fixed_shift"},
}};

constexpr std::array<std::pair<PartitionStatistic, std::string_view>, 3> kPartitionStatisticNames{{
    {PartitionStatistic::Corners, "corners"},
    {PartitionStatistic::DiagonalCorners, "diagonal_corners"},
    {PartitionStatistic::DurfeeRank, "durfee_rank"},
}};

int returns_of(const Permutation& p) {
  if (is_dominant(p)) return heights(psi_k(p)).returns;
  return heights(psi_bjs(p)).returns;
}

}  // namespace

std::string_view to_string(Statistic stat) {
  for (const auto& [s, name] : kStatisticNames) {
    if (s == stat) return name;
  }
  return "?";
}

Statistic parse_statistic(std::string_view name) {
  for (const auto& [s, label] : kStatisticNames) {
    if (label == name) return s;
  }
  throw Error(ErrorCode::BadArgs, "unknown statistic '" + std::string(name) + "'");
}

int evaluate(Statistic stat, const Permutation& p) {
  switch (stat) {
    case Statistic::Des:
      return static_cast<int>(descents(p).size());
    case Statistic::Exc:
      return static_cast<int>(excedances(p).size());
    case Statistic::Returns:
      return returns_of(p);
    case Statistic::DurfeeRank:
      return durfee_rank(require_dominant_partition(p));
    case Statistic::RtlMaxima:
      return static_cast<int>(right_to_left_maxima(p).size());
    case Statistic::FixedShift:
      return shifted_fixed_points(p);
  }
  throw Error(ErrorCode::BadArgs, "unknown statistic");
}

StatisticTable distribution(int n, std::span<const Permutation> patterns, Statistic stat, int cap) {
  StatisticTable table;
  for_each_avoider(
      n, patterns, [&](const Permutation& p) { table.add(evaluate(stat, p)); }, cap);
  return table;
}

StatisticTable distribution(std::span<const Permutation> members, Statistic stat) {
  StatisticTable table;
  for (const auto& p : members) table.add(evaluate(stat, p));
  return table;
}

std::string_view to_string(PartitionStatistic stat) {
  for (const auto& [s, name] : kPartitionStatisticNames) {
    if (s == stat) return name;
  }
  return "?";
}

PartitionStatistic parse_partition_statistic(std::string_view name) {
  for (const auto& [s, label] : kPartitionStatisticNames) {
    if (label == name) return s;
  }
  throw Error(ErrorCode::BadArgs, "unknown partition statistic '" + std::string(name) + "'");
}

StatisticTable partition_distribution(int n, PartitionStatistic stat) {
  StatisticTable table;
  for_each_staircase_partition(n, [&](const Partition& lambda) {
    switch (stat) {
      case PartitionStatistic::Corners:
        table.add(static_cast<int>(corners(lambda).size()));
        break;
      case PartitionStatistic::DiagonalCorners: {
        const auto cs = corners(lambda);
        table.add(static_cast<int>(std::count_if(cs.begin(), cs.end(), [n](Cell c) { return c.row + c.col == n; })));
        break;
      }
      case PartitionStatistic::DurfeeRank:
        table.add(durfee_rank(lambda));
        break;
    }
  });
  return table;
}

}  // namespace permdiag
