#include "permdiag/pattern.hpp"

#include "permdiag/error.hpp"

namespace permdiag {

namespace {

// Depth-first walk over increasing index tuples. A prefix is extended only
// while its values stay in the same relative order as the pattern prefix,
// so every surviving leaf is an occurrence.
class OccurrenceSearch {
 public:
  OccurrenceSearch(const Permutation& text, const Permutation& pattern, bool stop_at_first)
      : text_(text.values()), pattern_(pattern.values()), stop_(stop_at_first) {
    chosen_.reserve(pattern_.size());
  }

  std::uint64_t run() {
    extend(0);
    return found_;
  }

 private:
  bool consistent(int candidate) const {
    const std::size_t depth = chosen_.size();
    for (std::size_t t = 0; t < depth; ++t) {
      const bool text_less = text_[chosen_[t]] < candidate;
      const bool pattern_less = pattern_[t] < pattern_[depth];
      if (text_less != pattern_less) return false;
    }
    return true;
  }

  void extend(std::size_t start) {
    if (chosen_.size() == pattern_.size()) {
      ++found_;
      return;
    }
    const std::size_t remaining = pattern_.size() - chosen_.size();
    for (std::size_t i = start; i + remaining <= text_.size(); ++i) {
      if (!consistent(text_[i])) continue;
      chosen_.push_back(i);
      extend(i + 1);
      chosen_.pop_back();
      if (stop_ && found_ > 0) return;
    }
  }

  std::span<const int> text_;
  std::span<const int> pattern_;
  bool stop_;
  std::vector<std::size_t> chosen_;
  std::uint64_t found_ = 0;
};

}  // namespace

std::uint64_t occurrences(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) return 0;
  return OccurrenceSearch(p, pattern, false).run();
}

bool contains_pattern(const Permutation& p, const Permutation& pattern) {
  if (pattern.size() > p.size()) return false;
  return OccurrenceSearch(p, pattern, true).run() > 0;
}

bool avoids(const Permutation& p, const Permutation& pattern) { return !contains_pattern(p, pattern); }

bool avoids(const Permutation& p, std::span<const Permutation> patterns) {
  for (const auto& tau : patterns) {
    if (contains_pattern(p, tau)) return false;
  }
  return true;
}

void check_enumeration_size(int n, int cap) {
  if (n < 1) throw Error(ErrorCode::BadArgs, "n must be at least 1");
  if (n > cap) {
    throw Error(ErrorCode::SizeTooLarge,
                "n=" + std::to_string(n) + " exceeds enumeration cap " + std::to_string(cap));
  }
}

std::vector<Permutation> enumerate_avoiders(int n, std::span<const Permutation> patterns, int cap) {
  std::vector<Permutation> out;
  for_each_avoider(n, patterns, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

Permutation pattern_132() { return Permutation::from_values({1, 3, 2}); }
Permutation pattern_321() { return Permutation::from_values({3, 2, 1}); }

Permutation decreasing_pattern(int k) {
  std::vector<int> v;
  for (int x = k; x >= 1; --x) v.push_back(x);
  return Permutation::from_values(std::move(v));
}

Permutation increasing_pattern(int k) { return Permutation::identity(k); }

Permutation two_one_three_pattern(int k) {
  if (k < 2) throw Error(ErrorCode::BadK, "213...k needs k >= 2");
  std::vector<int> v{2, 1};
  for (int x = 3; x <= k; ++x) v.push_back(x);
  return Permutation::from_values(std::move(v));
}

Permutation shifted_pattern(int s, int k) {
  if (s < 1 || s > k) throw Error(ErrorCode::BadS, "shifted pattern needs 1 <= s <= k");
  std::vector<int> v;
  for (int x = s; x <= k; ++x) v.push_back(x);
  for (int x = 1; x < s; ++x) v.push_back(x);
  return Permutation::from_values(std::move(v));
}

}  // namespace permdiag
