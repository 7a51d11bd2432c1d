#include "permdiag/shifted.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <mutex>
#include <utility>

#include "permdiag/bijection.hpp"
#include "permdiag/diagram.hpp"
#include "permdiag/error.hpp"
#include "permdiag/pattern.hpp"

namespace permdiag {

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
  return std::is_sorted(v.begin(), v.end(), std::greater<>());
}

// Longest strictly decreasing subsequence of a ending at an entry whose
// height is at least min_height; 0 when no entry qualifies.
int longest_decreasing_ending_high(const ABHProfile& profile, int min_height) {
  const auto& a = profile.a;
  std::vector<int> best(a.size(), 1);
  int answer = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (a[j] > a[i]) best[i] = std::max(best[i], best[j] + 1);
    }
    if (profile.h[i] >= min_height) answer = std::max(answer, best[i]);
  }
  return answer;
}

void check_y(const Partition& lambda, int n) {
  if (n < 1) throw Error(ErrorCode::BadArgs, "n must be at least 1");
  if (!fits_staircase(lambda, n)) {
    throw Error(ErrorCode::DoesNotFitStaircase, lambda.to_string() + " does not fit Y_" + std::to_string(n));
  }
}

void check_s(int s) {
  if (s < 2) throw Error(ErrorCode::BadS, "s must be at least 2");
}

int shifted_length_of_partition(const Partition& mu, int n, int s) {
  return shifted_length(permutation_from_partition(mu, n), s);
}

// The s = 2 map: lambda_i + 1 where lambda_i + i < n, zeros moved to the end.
Partition increment_and_compress(const Partition& lambda, int n) {
  std::vector<int> parts;
  for (int i = 1; i <= n - 1; ++i) {
    if (lambda.part(i) + i < n) parts.push_back(lambda.part(i) + 1);
  }
  return Partition::from_parts(std::move(parts));
}

// Inverse of increment_and_compress: for every zero part of mu insert
// n-1-j after the last j with hat_j + j >= n-1 (or prepend n-1).
Partition increment_and_compress_inverse(const Partition& mu, int n) {
  std::vector<int> hat;
  for (int v : mu.parts()) hat.push_back(v - 1);
  const int zeros = (n - 1) - mu.length();
  for (int z = 0; z < zeros; ++z) {
    std::size_t insert_at = 0;
    for (std::size_t j = hat.size(); j >= 1; --j) {
      if (hat[j - 1] + static_cast<int>(j) >= n - 1) {
        insert_at = j;
        break;
      }
    }
    hat.insert(hat.begin() + static_cast<std::ptrdiff_t>(insert_at), n - 1 - static_cast<int>(insert_at));
  }
  return Partition::from_parts(std::move(hat));
}

// Undo the interchange pass: recompute the lambda candidate and swap back
// the first adjacent pair that breaks monotonicity. Returns nullopt when mu
// is not the image of any lambda under the pass.
std::optional<Partition> undo_interchange(const Partition& mu, int n, int s) {
  std::vector<int> seq = mu.padded(n - 1);
  const int top = n + 1 - s;
  if (top < 1) return std::nullopt;
  auto candidate = [&] {
    std::vector<int> hat(static_cast<std::size_t>(top));
    for (int i = 1; i <= top; ++i) {
      const int m = seq[static_cast<std::size_t>(i - 1)];
      hat[static_cast<std::size_t>(i - 1)] = m >= s - 1 ? m + 1 - s : m - i + n + 2 - s;
    }
    return hat;
  };
  const int step_limit = n * n;
  for (int steps = 0;; ++steps) {
    auto hat = candidate();
    std::size_t bad = hat.size();
    for (std::size_t i = 0; i + 1 < hat.size(); ++i) {
      if (hat[i] < hat[i + 1]) {
        bad = i;
        break;
      }
    }
    if (bad == hat.size()) {
      hat.insert(hat.end(), seq.begin() + top, seq.end());
      if (std::any_of(hat.begin(), hat.end(), [](int v) { return v < 0; }) || !weakly_decreasing(hat)) {
        return std::nullopt;
      }
      return Partition::from_parts(std::move(hat));
    }
    if (steps >= step_limit) return std::nullopt;
    if (seq[bad + 1] > 0) --seq[bad];
    std::swap(seq[bad], seq[bad + 1]);
  }
}

// Pairs the interchange outputs that are not partitions with the l_s-classes
// they have to fill, per (n, s). Both sides are ordered lexicographically
// descending within each l.
class ResidualMatching {
 public:
  ResidualMatching(int n, int s) {
    std::map<int, std::vector<std::pair<std::vector<int>, Partition>>> sources;
    std::set<Partition> hit;
    for_each_staircase_partition(n, [&](const Partition& lambda) {
      const int l = longest_increasing_from_partition(lambda, n);
      if (l <= s - 1) {
        hit.insert(conjugate(increment_and_compress(lambda, n)));
        return;
      }
      auto seq = interchange_sequence(lambda, n, s);
      if (weakly_decreasing(seq)) {
        hit.insert(Partition::from_parts(seq));
      } else {
        sources[l].emplace_back(std::move(seq), lambda);
      }
    });
    std::map<int, std::vector<Partition>> targets;
    for_each_staircase_partition(n, [&](const Partition& mu) {
      if (hit.count(mu)) return;
      targets[shifted_length_of_partition(mu, n, s)].push_back(mu);
    });
    for (auto& [l, from] : sources) {
      auto& to = targets[l];
      if (to.size() != from.size()) {
        throw Error(ErrorCode::PreconditionViolated, "residual class sizes disagree for l=" + std::to_string(l));
      }
      std::sort(from.begin(), from.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
      std::sort(to.begin(), to.end(), [n](const Partition& x, const Partition& y) {
        return x.padded(n - 1) > y.padded(n - 1);
      });
      for (std::size_t i = 0; i < from.size(); ++i) {
        forward_.emplace(from[i].second, to[i]);
        backward_.emplace(to[i], from[i].second);
      }
    }
  }

  std::optional<Partition> forward(const Partition& lambda) const { return lookup(forward_, lambda); }
  std::optional<Partition> backward(const Partition& mu) const { return lookup(backward_, mu); }

 private:
  static std::optional<Partition> lookup(const std::map<Partition, Partition>& table, const Partition& key) {
    auto it = table.find(key);
    if (it == table.end()) return std::nullopt;
    return it->second;
  }

  std::map<Partition, Partition> forward_;
  std::map<Partition, Partition> backward_;
};

const ResidualMatching& residual_matching(int n, int s) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ResidualMatching>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, s}];
  if (!slot) slot = std::make_unique<ResidualMatching>(n, s);
  return *slot;
}

}  // namespace

ABHProfile abh_profile(const Permutation& p) {
  if (!avoids(p, pattern_132())) throw Error(ErrorCode::Not132Avoiding, p.to_string() + " contains 132");
  const int n = p.size();
  ABHProfile out;
  out.lambda = require_dominant_partition(p);
  const Partition& lambda = out.lambda;
  const Partition lambda_conj = conjugate(lambda);
  for (int i = 1; i <= lambda.length(); ++i) out.a.push_back(n - (i + lambda.part(i)));
  for (int i = 1; i <= n - 1; ++i) out.a_bar.push_back(n - (i + lambda.part(i)));
  for (int i = 1; i <= lambda.largest(); ++i) out.b.push_back(n - (i + lambda_conj.part(i)));
  for (int i = 1; i <= lambda.length(); ++i) {
    // b_{lambda_i}, ..., b_1
    std::vector<int> seq(out.b.rend() - lambda.part(i), out.b.rend());
    std::vector<int> best(seq.size(), 1);
    for (std::size_t x = seq.size(); x-- > 0;) {
      for (std::size_t y = x + 1; y < seq.size(); ++y) {
        if (seq[y] > seq[x]) best[x] = std::max(best[x], best[y] + 1);
      }
    }
    out.h.push_back(best.front());
  }
  return out;
}

int shifted_length(const Permutation& p, int s) {
  check_s(s);
  return s - 1 + longest_decreasing_ending_high(abh_profile(p), s - 1);
}

bool avoids_shifted_by_diagram(const Permutation& p, int s, int k) {
  if (k < 3) throw Error(ErrorCode::BadK, "k must be at least 3");
  if (s < 2 || s > k) throw Error(ErrorCode::BadS, "need 2 <= s <= k");
  return longest_decreasing_ending_high(abh_profile(p), s - 1) <= k - s;
}

ShiftedProfile shifted_profile(const Permutation& p) {
  const ABHProfile profile = abh_profile(p);
  ShiftedProfile out;
  std::vector<int> parts;
  for (int s = 2; s <= p.size(); ++s) {
    const int l = s - 1 + longest_decreasing_ending_high(profile, s - 1);
    out.l_values[s] = l;
    parts.push_back(l - (s - 1));
  }
  out.L = Partition::from_parts(std::move(parts));
  return out;
}

int longest_increasing_from_partition(const Partition& lambda, int n) {
  int best = 0;
  for (int i = 1; i <= n; ++i) best = std::max(best, n + 1 - i - lambda.part(i));
  return best;
}

std::vector<int> interchange_sequence(const Partition& lambda, int n, int s) {
  check_s(s);
  check_y(lambda, n);
  std::vector<int> seq;
  seq.reserve(static_cast<std::size_t>(std::max(n - 1, 0)));
  for (int i = 1; i <= n - 1; ++i) {
    const int part = lambda.part(i);
    if (i <= n + 1 - s) {
      seq.push_back(part + i < n + 2 - s ? part + s - 1 : part + i - (n + 2 - s));
    } else {
      seq.push_back(part);
    }
  }
  // Move every entry >= s-1 ahead of the smaller ones, bumping it past each
  // positive entry it overtakes.
  const int step_limit = n * n;
  for (int steps = 0;; ++steps) {
    std::size_t i = 0;
    while (i + 1 < seq.size() && !(seq[i] < s - 1 && seq[i + 1] >= s - 1)) ++i;
    if (i + 1 >= seq.size()) break;
    if (steps >= step_limit) throw Error(ErrorCode::PreconditionViolated, "interchange pass did not settle");
    if (seq[i] > 0) ++seq[i + 1];
    std::swap(seq[i], seq[i + 1]);
  }
  return seq;
}

Partition mu_map(const Partition& lambda, int n, int s) {
  check_s(s);
  check_y(lambda, n);
  if (longest_increasing_from_partition(lambda, n) <= s - 1) {
    return conjugate(increment_and_compress(lambda, n));
  }
  auto seq = interchange_sequence(lambda, n, s);
  if (weakly_decreasing(seq)) return Partition::from_parts(std::move(seq));
  auto matched = residual_matching(n, s).forward(lambda);
  if (!matched) throw Error(ErrorCode::PreconditionViolated, "no residual image for " + lambda.to_string());
  return *matched;
}

Partition mu_map_inverse(const Partition& mu, int n, int s) {
  check_s(s);
  check_y(mu, n);
  if (s == 2) return increment_and_compress_inverse(mu, n);
  if (shifted_length_of_partition(mu, n, s) <= s - 1) return increment_and_compress_inverse(conjugate(mu), n);
  if (auto lambda = undo_interchange(mu, n, s)) {
    if (fits_staircase(*lambda, n) && longest_increasing_from_partition(*lambda, n) >= s) {
      auto seq = interchange_sequence(*lambda, n, s);
      if (weakly_decreasing(seq) && Partition::from_parts(seq) == mu) return *lambda;
    }
  }
  auto matched = residual_matching(n, s).backward(mu);
  if (!matched) throw Error(ErrorCode::PreconditionViolated, "no preimage for " + mu.to_string());
  return *matched;
}

}  // namespace permdiag
