#include "permdiag/identities.hpp"

#include <algorithm>
#include <climits>
#include <optional>
#include <set>
#include <sstream>

#include "permdiag/bijection.hpp"
#include "permdiag/characterization.hpp"
#include "permdiag/diagram.hpp"
#include "permdiag/dyck.hpp"
#include "permdiag/enumeration.hpp"
#include "permdiag/error.hpp"
#include "permdiag/shifted.hpp"

namespace permdiag {

namespace {

// Full S_n sweeps stop here; everything else follows n_max.
constexpr int kFullSweepLimit = 9;
constexpr int kMinPatternLength = 3;
constexpr int kMaxPatternLength = 6;

// The classes every identity at a given n draws from, built on first use.
class Universe {
 public:
  explicit Universe(int n) : n_(n) {}

  int n() const noexcept { return n_; }

  const std::vector<Permutation>& all() {
    if (!all_) {
      all_.emplace();
      for_each_permutation(n_, [&](const Permutation& p) { all_->push_back(p); });
    }
    return *all_;
  }

  const std::vector<Permutation>& avoiders_132() {
    split();
    return *avoid_132_;
  }

  const std::vector<Permutation>& avoiders_321() {
    split();
    return *avoid_321_;
  }

  const std::vector<Partition>& young() {
    if (!young_) young_ = staircase_partitions(n_);
    return *young_;
  }

 private:
  // One pass over S_n fills both avoidance classes.
  void split() {
    if (avoid_132_) return;
    avoid_132_.emplace();
    avoid_321_.emplace();
    const auto p132 = pattern_132();
    const auto p321 = pattern_321();
    auto visit = [&](const Permutation& p) {
      if (avoids(p, p132)) avoid_132_->push_back(p);
      if (avoids(p, p321)) avoid_321_->push_back(p);
    };
    if (all_) {
      for (const auto& p : *all_) visit(p);
    } else {
      for_each_permutation(n_, visit);
    }
  }

  int n_;
  std::optional<std::vector<Permutation>> all_;
  std::optional<std::vector<Permutation>> avoid_132_;
  std::optional<std::vector<Permutation>> avoid_321_;
  std::optional<std::vector<Partition>> young_;
};

struct Outcome {
  std::string expected;
  std::string got;
};

Outcome same(const std::string& expected, const std::string& got) { return {expected, got}; }

template <typename T>
Outcome same(const T& expected, const T& got) {
  std::ostringstream e;
  std::ostringstream g;
  e << expected;
  g << got;
  return {e.str(), g.str()};
}

Outcome same(const StatisticTable& expected, const StatisticTable& got) {
  return {expected.to_string(), got.to_string()};
}

// Tallies how many cases satisfy a property; expected is the case count.
class Tally {
 public:
  void check(bool ok) {
    ++cases_;
    if (ok) ++holding_;
  }
  Outcome outcome() const { return same(cases_, holding_); }

 private:
  std::uint64_t cases_ = 0;
  std::uint64_t holding_ = 0;
};

template <typename Range, typename Pred>
Outcome count_holding(const Range& range, Pred pred) {
  Tally tally;
  for (const auto& x : range) tally.check(pred(x));
  return tally.outcome();
}

std::uint64_t as_u64(const BigInt& x) { return x.convert_to<std::uint64_t>(); }

void add_nonzero(StatisticTable& table, int key, const BigInt& value) {
  if (value > 0) table.add(key, as_u64(value));
}

StatisticTable ballot_row(int n) {
  StatisticTable table;
  for (int k = 1; k <= n; ++k) add_nonzero(table, k - 1, ballot(n - 1, n - k));
  return table;
}

std::vector<Entry> predicted_image_minima(const Permutation& p) {
  const int n = p.size();
  const auto exc = excedances(p);
  std::vector<Entry> minima;
  int position = 1;
  for (int i : exc) {
    minima.push_back({position, n + 2 - p(i)});
    position = i + 1;
  }
  minima.push_back({position, 1});
  return minima;
}

int brute_shifted_length(const Permutation& p, int s) {
  int l = s - 1;
  for (int k = s; k <= p.size(); ++k) {
    if (!contains_pattern(p, shifted_pattern(s, k))) break;
    l = k;
  }
  return l;
}

std::size_t class_size(const std::vector<Permutation>& base, const Permutation& pattern) {
  std::size_t count = 0;
  for (const auto& p : base) {
    if (avoids(p, pattern)) ++count;
  }
  return count;
}

StatisticTable class_sizes_by_k(Universe& u, Permutation (*pattern)(int)) {
  StatisticTable table;
  for (int k = kMinPatternLength; k <= kMaxPatternLength; ++k) {
    table.add(k, class_size(u.avoiders_132(), pattern(k)));
  }
  return table;
}

Permutation cyclic_pattern(int k) { return shifted_pattern(2, k); }
Permutation rotated_pattern(int k) { return shifted_pattern(k, k); }

Outcome criterion_agreement(Universe& u, AvoidanceKind kind) {
  Tally tally;
  for (int k = kMinPatternLength; k <= kMaxPatternLength; ++k) {
    const auto tau = pattern_for(kind, k);
    for (const auto& p : u.avoiders_132()) tally.check(diagram_avoidance_check(p, k, kind) == avoids(p, tau));
  }
  return tally.outcome();
}

struct Identity {
  std::string name;
  std::string description;
  int max_n;
  std::function<Outcome(Universe&)> run;
};

std::vector<Identity> registry() {
  std::vector<Identity> ids;
  auto add = [&](std::string name, std::string description, int max_n, std::function<Outcome(Universe&)> run) {
    ids.push_back({std::move(name), std::move(description), max_n, std::move(run)});
  };

  // Class sizes.
  add("catalan-132-avoiders", "|S_n(132)| = C_n", INT_MAX,
      [](Universe& u) { return same(catalan(u.n()), BigInt(u.avoiders_132().size())); });
  add("catalan-321-avoiders", "|S_n(321)| = C_n", INT_MAX,
      [](Universe& u) { return same(catalan(u.n()), BigInt(u.avoiders_321().size())); });
  add("catalan-staircase-partitions", "|Y_n| = C_n", INT_MAX,
      [](Universe& u) { return same(catalan(u.n()), BigInt(u.young().size())); });

  // Diagrams over all of S_n.
  add("dominant-iff-132-avoiding", "D(p) is a Young diagram iff p avoids 132", kFullSweepLimit, [](Universe& u) {
    const auto tau = pattern_132();
    return count_holding(u.all(), [&](const Permutation& p) { return is_dominant(p) == avoids(p, tau); });
  });
  add("rank-sum-counts-132", "sum of diagram ranks = number of 132 occurrences", kFullSweepLimit, [](Universe& u) {
    const auto tau = pattern_132();
    return count_holding(u.all(), [&](const Permutation& p) {
      return count_132_by_rank(p) == static_cast<std::int64_t>(occurrences(p, tau));
    });
  });
  add("transpose-under-inverse", "D(p^-1) is the transpose of D(p)", kFullSweepLimit, [](Universe& u) {
    return count_holding(u.all(), [](const Permutation& p) {
      return build_diagram(inverse(p)) == build_diagram(p).transpose();
    });
  });

  // The corner bijection.
  add("phi-image-is-132-class", "phi maps S_n(321) onto S_n(132)", INT_MAX, [](Universe& u) {
    std::set<Permutation> image;
    const auto tau = pattern_132();
    for (const auto& p : u.avoiders_321()) {
      auto sigma = phi(p);
      if (avoids(sigma, tau)) image.insert(std::move(sigma));
    }
    return same(catalan(u.n()), BigInt(image.size()));
  });
  add("phi-corners", "corners of D(phi(p)) are (i, n+1-p(i)) over excedances", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_321(), [](const Permutation& p) {
      return corners(require_dominant_partition(phi(p))) == excedance_corners(p);
    });
  });
  add("excedances-equal-image-descents", "exc set of p = descent set of phi(p)", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_321(), [](const Permutation& p) { return excedances(p) == descents(phi(p)); });
  });
  add("image-ltr-minima", "left-to-right minima of phi(p) read off the excedance letters", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_321(), [](const Permutation& p) {
      return left_to_right_minima(phi(p)) == predicted_image_minima(p);
    });
  });
  add("phi-roundtrip", "phi_inverse . phi and phi . phi_inverse are identities", INT_MAX, [](Universe& u) {
    Tally tally;
    for (const auto& p : u.avoiders_321()) tally.check(phi_inverse(phi(p)) == p);
    for (const auto& s : u.avoiders_132()) tally.check(phi(phi_inverse(s)) == s);
    return tally.outcome();
  });
  add("partition-permutation-roundtrip", "dominant partition and permutation_from_partition are inverse", INT_MAX,
      [](Universe& u) {
        Tally tally;
        const int n = u.n();
        for (const auto& lambda : u.young()) tally.check(require_dominant_partition(permutation_from_partition(lambda, n)) == lambda);
        for (const auto& p : u.avoiders_132()) tally.check(permutation_from_partition(require_dominant_partition(p), n) == p);
        return tally.outcome();
      });
  add("fill-from-minima-roundtrip", "a 132-avoider is determined by its left-to-right minima", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_132(), [&](const Permutation& p) {
      return fill_from_minima(left_to_right_minima(p), u.n()) == p;
    });
  });

  // Dyck paths.
  add("psi-bjs-equals-psi-k-of-phi", "psi_bjs(p) = psi_k(phi(p))", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_321(), [](const Permutation& p) { return psi_bjs(p) == psi_k(phi(p)); });
  });
  add("psi-roundtrip", "psi_bjs and psi_k invert", INT_MAX, [](Universe& u) {
    Tally tally;
    for (const auto& p : u.avoiders_321()) tally.check(psi_bjs_inverse(psi_bjs(p)) == p);
    for (const auto& p : u.avoiders_132()) tally.check(psi_k_inverse(psi_k(p)) == p);
    return tally.outcome();
  });
  add("path-partition-roundtrip", "path_partition and partition_path invert", INT_MAX, [](Universe& u) {
    Tally tally;
    const int n = u.n();
    for (const auto& lambda : u.young()) tally.check(path_partition(partition_path(lambda, n)) == lambda);
    for (const auto& p : u.avoiders_132()) {
      const auto path = psi_k(p);
      tally.check(partition_path(path_partition(path), n) == path);
    }
    return tally.outcome();
  });
  add("height-sum-all", "sum of start heights = n^2 - 2 inv", INT_MAX, [](Universe& u) {
    const std::int64_t n = u.n();
    return count_holding(u.avoiders_132(), [&](const Permutation& p) {
      return heights(psi_k(p)).sum_all == n * n - 2 * inversions(p);
    });
  });
  add("height-sum-down", "sum of down-step start heights = n(n+1)/2 - inv", INT_MAX, [](Universe& u) {
    const std::int64_t n = u.n();
    return count_holding(u.avoiders_132(), [&](const Permutation& p) {
      return heights(psi_k(p)).sum_down == n * (n + 1) / 2 - inversions(p);
    });
  });
  add("middle-height-durfee", "w_{n+1} = n - 2 durfee_rank", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_132(), [&](const Permutation& p) {
      return heights(psi_k(p)).rank_height == u.n() - 2 * durfee_rank(require_dominant_partition(p));
    });
  });
  add("returns-rtl-maxima", "returns of psi_k(p) = right-to-left maxima of p", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_132(), [](const Permutation& p) {
      return heights(psi_k(p)).returns == static_cast<int>(right_to_left_maxima(p).size());
    });
  });
  add("returns-fixed-shift", "returns of psi_bjs(p) = 1 + #{i : p(i) = i+1}", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_321(), [](const Permutation& p) {
      return heights(psi_bjs(p)).returns == 1 + shifted_fixed_points(p);
    });
  });

  // Distributions against closed forms.
  add("narayana-row-sum", "sum_k N(n,k) = C_n", INT_MAX, [](Universe& u) {
    BigInt sum = 0;
    for (int k = 1; k <= u.n(); ++k) sum += narayana(u.n(), k);
    return same(catalan(u.n()), sum);
  });
  add("des-narayana", "des over S_n(132) is N(n, des+1)", INT_MAX, [](Universe& u) {
    StatisticTable expected;
    for (int k = 1; k <= u.n(); ++k) add_nonzero(expected, k - 1, narayana(u.n(), k));
    return same(expected, distribution(u.avoiders_132(), Statistic::Des));
  });
  add("corners-narayana", "partitions in Y_n with k corners: N(n, k+1)", INT_MAX, [](Universe& u) {
    StatisticTable expected;
    for (int k = 0; k < u.n(); ++k) add_nonzero(expected, k, narayana(u.n(), k + 1));
    return same(expected, partition_distribution(u.n(), PartitionStatistic::Corners));
  });
  add("diagonal-corners-ballot", "partitions with k-1 corners on i+j=n: b(n-1, n-k)", INT_MAX, [](Universe& u) {
    return same(ballot_row(u.n()), partition_distribution(u.n(), PartitionStatistic::DiagonalCorners));
  });
  add("fixed-shift-ballot", "321-avoiders with k-1 entries p(i)=i+1: b(n-1, n-k)", INT_MAX, [](Universe& u) {
    return same(ballot_row(u.n()), distribution(u.avoiders_321(), Statistic::FixedShift));
  });
  add("returns-ballot", "psi_k paths with k returns: b(n-1, n-k)", INT_MAX, [](Universe& u) {
    StatisticTable expected;
    for (int k = 1; k <= u.n(); ++k) add_nonzero(expected, k, ballot(u.n() - 1, u.n() - k));
    return same(expected, distribution(u.avoiders_132(), Statistic::Returns));
  });
  add("durfee-rank-count", "partitions in Y_n of Durfee rank k: rank_count(n,k)", INT_MAX, [](Universe& u) {
    StatisticTable expected;
    for (int k = 0; k <= u.n() / 2; ++k) add_nonzero(expected, k, rank_count(u.n(), k));
    return same(expected, partition_distribution(u.n(), PartitionStatistic::DurfeeRank));
  });
  add("rank-count-total", "sum_k rank_count(n,k) = C_n", INT_MAX, [](Universe& u) {
    BigInt sum = 0;
    for (int k = 0; k <= u.n() / 2; ++k) sum += rank_count(u.n(), k);
    return same(catalan(u.n()), sum);
  });
  add("q-squared-rank-count", "q(n,k)^2 = rank_count(n,k)", INT_MAX, [](Universe& u) {
    StatisticTable expected;
    StatisticTable got;
    for (int k = 0; k <= u.n() / 2; ++k) {
      add_nonzero(expected, k, rank_count(u.n(), k));
      const BigInt q = q_triangle(u.n(), k);
      add_nonzero(got, k, q * q);
    }
    return same(expected, got);
  });
  add("q-boundary", "q(n,0) = 1 and q(n, n/2) = C_{ceil(n/2)}", INT_MAX, [](Universe& u) {
    const int n = u.n();
    std::ostringstream expected;
    std::ostringstream got;
    expected << 1 << '/' << catalan((n + 1) / 2);
    got << q_triangle(n, 0) << '/' << q_triangle(n, n / 2);
    return same(expected.str(), got.str());
  });

  // Pattern characterisations.
  add("longest-decreasing-des", "longest decreasing subsequence = des + 1 on S_n(132)", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_132(), [](const Permutation& p) {
      return longest_decreasing_length(p) == static_cast<int>(descents(p).size()) + 1;
    });
  });
  add("longest-increasing-partition", "longest increasing subsequence = max n+1-i-lambda_i", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_132(), [&](const Permutation& p) {
      return longest_increasing_length(p) == longest_increasing_from_partition(require_dominant_partition(p), u.n());
    });
  });
  add("decreasing-corner-criterion", "avoids k..1 iff at most k-2 corners, k=3..6", INT_MAX,
      [](Universe& u) { return criterion_agreement(u, AvoidanceKind::Decreasing); });
  add("increasing-staircase-criterion", "avoids 1..k iff diagram contains (n+1-k,...,1), k=3..6", INT_MAX,
      [](Universe& u) { return criterion_agreement(u, AvoidanceKind::Increasing); });
  add("two-one-three-corner-criterion", "avoids 213..k iff every corner has i+j >= n+3-k, k=3..6", INT_MAX,
      [](Universe& u) { return criterion_agreement(u, AvoidanceKind::TwoOneThree); });
  add("shifted-height-criterion", "height criterion for s..k1..(s-1), 3<=k<=6, 2<=s<=k", INT_MAX, [](Universe& u) {
    Tally tally;
    for (int k = kMinPatternLength; k <= kMaxPatternLength; ++k) {
      for (int s = 2; s <= k; ++s) {
        const auto tau = shifted_pattern(s, k);
        for (const auto& p : u.avoiders_132()) tally.check(avoids_shifted_by_diagram(p, s, k) == avoids(p, tau));
      }
    }
    return tally.outcome();
  });
  add("shifted-length-oracle", "l_s from heights = brute-force l_s", kFullSweepLimit, [](Universe& u) {
    Tally tally;
    for (const auto& p : u.avoiders_132()) {
      for (int s = 2; s <= u.n(); ++s) tally.check(shifted_length(p, s) == brute_shifted_length(p, s));
    }
    return tally.outcome();
  });
  add("shifted-profile-conjugate", "L(p^-1) = conjugate of L(p)", INT_MAX, [](Universe& u) {
    return count_holding(u.avoiders_132(), [](const Permutation& p) {
      return shifted_profile(inverse(p)).L == conjugate(shifted_profile(p).L);
    });
  });
  add("decreasing-avoiders-formula", "|S_n(132, k..1)| = (1/n) sum C(n,i) C(n,i-1), k=3..6", INT_MAX, [](Universe& u) {
    StatisticTable expected;
    for (int k = kMinPatternLength; k <= kMaxPatternLength; ++k) {
      add_nonzero(expected, k, decreasing_avoider_formula(u.n(), k));
    }
    return same(expected, class_sizes_by_k(u, decreasing_pattern));
  });
  add("two-one-three-class-size", "|S_n(132, 213..k)| = |S_n(132, 12..k)|", INT_MAX, [](Universe& u) {
    return same(class_sizes_by_k(u, increasing_pattern), class_sizes_by_k(u, two_one_three_pattern));
  });
  add("cyclic-class-size", "|S_n(132, 23..k1)| = |S_n(132, 12..k)|", INT_MAX, [](Universe& u) {
    return same(class_sizes_by_k(u, increasing_pattern), class_sizes_by_k(u, cyclic_pattern));
  });
  add("rotated-class-size", "|S_n(132, k12..(k-1))| = |S_n(132, 12..k)|", INT_MAX, [](Universe& u) {
    return same(class_sizes_by_k(u, increasing_pattern), class_sizes_by_k(u, rotated_pattern));
  });
  add("shifted-class-sizes", "|S_n(132, s..k1..(s-1))| = |S_n(132, 12..k)| for all s", INT_MAX, [](Universe& u) {
    const auto base = class_sizes_by_k(u, increasing_pattern);
    Tally tally;
    for (int k = kMinPatternLength; k <= kMaxPatternLength; ++k) {
      for (int s = 1; s <= k; ++s) tally.check(class_size(u.avoiders_132(), shifted_pattern(s, k)) == base.count(k));
    }
    return tally.outcome();
  });
  add("staircase-union-roundtrip", "corner-dropping map and staircase union invert, k=3..6", INT_MAX, [](Universe& u) {
    Tally tally;
    const int n = u.n();
    for (int k = kMinPatternLength; k <= kMaxPatternLength; ++k) {
      const auto stairs = Partition::staircase(n + 1 - k);
      for (const auto& d : u.young()) {
        if (contains(d, stairs)) tally.check(staircase_union_inverse(staircase_union_forward(d, n, k), n, k) == d);
        const auto cs = corners(d);
        const bool high = std::all_of(cs.begin(), cs.end(), [&](Cell c) { return c.row + c.col >= n + 3 - k; });
        if (high) tally.check(staircase_union_forward(staircase_union_inverse(d, n, k), n, k) == d);
      }
    }
    return tally.outcome();
  });
  add("mu-map-bijection", "mu_map is a bijection on Y_n with inverse mu_map_inverse, s=2..4", INT_MAX, [](Universe& u) {
    Tally tally;
    const int n = u.n();
    for (int s = 2; s <= 4; ++s) {
      std::set<Partition> image;
      for (const auto& lambda : u.young()) {
        auto mu = mu_map(lambda, n, s);
        tally.check(fits_staircase(mu, n) && mu_map_inverse(mu, n, s) == lambda);
        image.insert(std::move(mu));
      }
      tally.check(image.size() == u.young().size());
    }
    return tally.outcome();
  });
  add("mu-map-transport", "l(perm(lambda)) = l_s(perm(mu_map(lambda))) when l >= s-1, s=2..4", INT_MAX,
      [](Universe& u) {
        Tally tally;
        const int n = u.n();
        for (int s = 2; s <= 4; ++s) {
          for (const auto& lambda : u.young()) {
            const int l = longest_increasing_length(permutation_from_partition(lambda, n));
            if (l < s - 1) continue;
            tally.check(shifted_length(permutation_from_partition(mu_map(lambda, n, s), n), s) == l);
          }
        }
        return tally.outcome();
      });

  return ids;
}

}  // namespace

std::string format_line(const IdentityResult& result) {
  std::ostringstream out;
  out << "IDENT " << result.name << " n=" << result.n << " expected=" << result.expected << " got=" << result.got << ' '
      << (result.pass ? "PASS" : "FAIL");
  return out.str();
}

std::size_t IdentityReport::failures() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; }));
}

std::vector<IdentityInfo> identity_catalog() {
  std::vector<IdentityInfo> out;
  for (const auto& id : registry()) out.push_back({id.name, id.description, id.max_n});
  return out;
}

IdentityReport verify_identities(int n_max, int cap, const std::function<void(const IdentityResult&)>& on_result) {
  check_enumeration_size(n_max, cap);
  const auto ids = registry();
  IdentityReport report;
  for (int n = 1; n <= n_max; ++n) {
    Universe universe(n);
    for (const auto& id : ids) {
      if (n > id.max_n) continue;
      IdentityResult result{id.name, n, {}, {}, false};
      try {
        auto outcome = id.run(universe);
        result.expected = std::move(outcome.expected);
        result.got = std::move(outcome.got);
        result.pass = result.expected == result.got;
      } catch (const Error& e) {
        result.expected = "no error";
        result.got = std::string("error:") + std::string(to_string(e.code()));
      }
      if (on_result) on_result(result);
      report.results.push_back(std::move(result));
    }
  }
  return report;
}

}  // namespace permdiag
