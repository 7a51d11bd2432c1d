#include "permdiag/permutation.hpp"

#include <sstream>

#include "permdiag/error.hpp"

namespace permdiag {

Permutation Permutation::from_values(std::vector<int> values) {
  if (values.empty()) throw Error(ErrorCode::Empty, "permutation must have at least one entry");
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(values.size() + 1, false);
  for (int v : values) {
    if (v < 1 || v > n) {
      throw Error(ErrorCode::OutOfRange,
                  "value " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[static_cast<std::size_t>(v)]) {
      throw Error(ErrorCode::DuplicateValue, "value " + std::to_string(v) + " repeated");
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
  return Permutation(std::move(values));
}

Permutation Permutation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error(ErrorCode::Parse, "not an integer: '" + token + "'");
    }
    if (used != token.size()) throw Error(ErrorCode::Parse, "not an integer: '" + token + "'");
    values.push_back(v);
  }
  return from_values(std::move(values));
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(ErrorCode::Empty, "identity needs n >= 1");
  std::vector<int> values(static_cast<std::size_t>(n));
  std::iota(values.begin(), values.end(), 1);
  return Permutation(std::move(values));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(values_[i]);
  }
  return out;
}

Permutation make_permutation(std::span<const int> values) {
  return Permutation::from_values(std::vector<int>(values.begin(), values.end()));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> q(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) q[static_cast<std::size_t>(p(i) - 1)] = i;
  return Permutation::from_values(std::move(q));
}

std::vector<int> code(const Permutation& p) {
  const int n = p.size();
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (p(j) < p(i)) ++c[static_cast<std::size_t>(i - 1)];
    }
  }
  return c;
}

std::vector<int> descents(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > p(i + 1)) out.push_back(i);
  }
  return out;
}

std::vector<int> excedances(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > i) out.push_back(i);
  }
  return out;
}

std::vector<Entry> left_to_right_minima(const Permutation& p) {
  std::vector<Entry> out;
  int smallest = p.size() + 1;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) < smallest) {
      smallest = p(i);
      out.push_back({i, p(i)});
    }
  }
  return out;
}

std::vector<Entry> right_to_left_maxima(const Permutation& p) {
  std::vector<Entry> out;
  int largest = 0;
  for (int i = p.size(); i >= 1; --i) {
    if (p(i) > largest) {
      largest = p(i);
      out.push_back({i, p(i)});
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::int64_t inversions(const Permutation& p) {
  std::int64_t total = 0;
  for (int c : code(p)) total += c;
  return total;
}

std::vector<int> descent_bottoms(const Permutation& p) {
  std::vector<int> out;
  for (int i : descents(p)) out.push_back(p(i + 1));
  return out;
}

int shifted_fixed_points(const Permutation& p) {
  int count = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) == i + 1) ++count;
  }
  return count;
}

namespace {

// Patience sorting; strict increase.
int longest_strictly_increasing(std::span<const int> seq) {
  std::vector<int> tails;
  for (int v : seq) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

}  // namespace

int longest_increasing_length(const Permutation& p) { return longest_strictly_increasing(p.values()); }

int longest_decreasing_length(const Permutation& p) {
  std::vector<int> negated;
  negated.reserve(static_cast<std::size_t>(p.size()));
  for (int v : p.values()) negated.push_back(-v);
  return longest_strictly_increasing(negated);
}

PermStats statistics(const Permutation& p) {
  PermStats stats;
  stats.descents = descents(p);
  stats.excedances = excedances(p);
  for (int i : stats.excedances) stats.excedance_letters.push_back(p(i));
  stats.ltr_minima = left_to_right_minima(p);
  stats.rtl_maxima = right_to_left_maxima(p);
  stats.code = code(p);
  for (int c : stats.code) stats.inversions += c;
  return stats;
}

}  // namespace permdiag
