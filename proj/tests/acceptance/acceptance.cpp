// One line per acceptance criterion: "CRITERION <k> PASS|FAIL <summary>".
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "permdiag/bijection.hpp"
#include "permdiag/characterization.hpp"
#include "permdiag/diagram.hpp"
#include "permdiag/dyck.hpp"
#include "permdiag/enumeration.hpp"
#include "permdiag/pattern.hpp"
#include "permdiag/shifted.hpp"

using namespace permdiag;

namespace {

struct Verdict {
  bool pass = true;
  std::uint64_t cases = 0;
  std::string first_failure;

  void check(bool ok, const std::string& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      first_failure = what;
    }
  }
  void check(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok && pass) {
      pass = false;
      first_failure = what();
    }
  }
};

// S_n(132) and S_n(321) by one brute-force sweep of S_n.
struct Classes {
  std::vector<Permutation> avoid_132;
  std::vector<Permutation> avoid_321;
};

Classes brute_classes(int n) {
  Classes out;
  const auto p132 = pattern_132();
  const auto p321 = pattern_321();
  for_each_permutation(n, [&](const Permutation& p) {
    if (avoids(p, p132)) out.avoid_132.push_back(p);
    if (avoids(p, p321)) out.avoid_321.push_back(p);
  });
  return out;
}

std::vector<Classes>& classes_up_to_9() {
  static std::vector<Classes> cache = [] {
    std::vector<Classes> c(10);
    for (int n = 1; n <= 9; ++n) c[static_cast<std::size_t>(n)] = brute_classes(n);
    return c;
  }();
  return cache;
}

const Classes& classes(int n) { return classes_up_to_9()[static_cast<std::size_t>(n)]; }

std::string str(const BigInt& x) { return x.str(); }

Verdict catalan_counts() {
  Verdict v;
  for (int n = 1; n <= 10; ++n) {
    const auto c = n <= 9 ? classes(n) : brute_classes(n);
    const auto expected = catalan(n);
    v.check(BigInt(c.avoid_132.size()) == expected && BigInt(c.avoid_321.size()) == expected, [&] {
      return "n=" + std::to_string(n) + " |S(132)|=" + std::to_string(c.avoid_132.size()) +
             " |S(321)|=" + std::to_string(c.avoid_321.size()) + " C=" + str(expected);
    });
  }
  v.check(catalan(10) == 16796, "C_10");
  return v;
}

Verdict golden_vectors() {
  Verdict v;
  const auto pi = Permutation::parse("1 4 7 2 3 8 5 6 10 9");
  const auto sigma = Permutation::parse("8 9 5 4 6 7 2 3 10 1");
  const auto ex53 = Permutation::parse("4 2 8 3 6 9 7 5 1 10");
  v.check(phi(pi) == sigma, "phi image");
  v.check(psi_bjs(pi).to_string() == "UUUDDUUUDUDDDUUDDDUD", "psi_bjs path");
  v.check(psi_k(sigma).to_string() == "UUUDDUUUDUDDDUUDDDUD", "psi_k path");
  v.check(occurrences(ex53, pattern_132()) == 20, "132 occurrences");
  v.check(count_132_by_rank(ex53) == 20, "rank sum");
  v.check(inversions(ex53) == 18, "inversions");
  const auto abh = abh_profile(sigma);
  v.check(abh.a == std::vector<int>{2, 1, 3, 3, 2, 1, 2, 1, 0}, "a");
  v.check(abh.b == std::vector<int>{0, 2, 1, 3, 3, 2, 1}, "b");
  v.check(abh.h == std::vector<int>{3, 3, 1, 2, 2, 2, 1, 1, 1}, "h");
  return v;
}

Verdict paths_agree() {
  Verdict v;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : classes(n).avoid_321) {
      v.check(psi_bjs(p) == psi_k(phi(p)), [&] { return "p=" + p.to_string(); });
    }
  }
  return v;
}

Verdict excedances_and_minima() {
  Verdict v;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : classes(n).avoid_321) {
      const auto s = phi(p);
      v.check(excedances(p) == descents(s), [&] { return "exc/des p=" + p.to_string(); });
      const auto exc = excedances(p);
      std::vector<Entry> expected;
      int position = 1;
      for (int i : exc) {
        expected.push_back({position, n + 2 - p(i)});
        position = i + 1;
      }
      expected.push_back({position, 1});
      v.check(left_to_right_minima(s) == expected, [&] { return "minima p=" + p.to_string(); });
    }
  }
  return v;
}

Verdict rank_sum() {
  Verdict v;
  const auto tau = pattern_132();
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      v.check(count_132_by_rank(p) == static_cast<std::int64_t>(occurrences(p, tau)),
              [&] { return "p=" + p.to_string(); });
    });
  }
  return v;
}

Verdict height_statistics() {
  Verdict v;
  for (int n = 1; n <= 8; ++n) {
    const std::int64_t nn = n;
    for (const auto& p : classes(n).avoid_132) {
      const auto h = heights(psi_k(p));
      const auto inv = inversions(p);
      auto where = [&] { return "p=" + p.to_string(); };
      v.check(h.sum_all == nn * nn - 2 * inv, where);
      v.check(h.sum_down == nn * (nn + 1) / 2 - inv, where);
      v.check(h.rank_height == n - 2 * durfee_rank(require_dominant_partition(p)), where);
      v.check(h.returns == static_cast<int>(right_to_left_maxima(p).size()), where);
    }
    for (const auto& p : classes(n).avoid_321) {
      v.check(heights(psi_bjs(p)).returns == 1 + shifted_fixed_points(p), [&] { return "p=" + p.to_string(); });
    }
  }
  return v;
}

Verdict rank_counts() {
  Verdict v;
  for (int n = 1; n <= 14; ++n) {
    const auto table = partition_distribution(n, PartitionStatistic::DurfeeRank);
    BigInt sum = 0;
    for (int k = 0; k <= n / 2; ++k) {
      const auto expected = rank_count(n, k);
      const auto q = q_triangle(n, k);
      auto where = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };
      v.check(BigInt(table.count(k)) == expected, where);
      v.check(q * q == expected, where);
      sum += expected;
    }
    v.check(sum == catalan(n), "sum n=" + std::to_string(n));
    v.check(BigInt(table.total()) == catalan(n), "|Y_n| n=" + std::to_string(n));
  }
  return v;
}

Verdict diagram_criteria() {
  Verdict v;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : classes(n).avoid_132) {
      for (int k = 3; k <= 6; ++k) {
        for (auto kind : {AvoidanceKind::Decreasing, AvoidanceKind::Increasing, AvoidanceKind::TwoOneThree}) {
          v.check(diagram_avoidance_check(p, k, kind) == avoids(p, pattern_for(kind, k)),
                  [&] { return "p=" + p.to_string() + " k=" + std::to_string(k); });
        }
        for (int s = 2; s <= k; ++s) {
          v.check(avoids_shifted_by_diagram(p, s, k) == avoids(p, shifted_pattern(s, k)),
                  [&] { return "p=" + p.to_string() + " k=" + std::to_string(k) + " s=" + std::to_string(s); });
        }
      }
    }
  }
  return v;
}

Verdict class_sizes() {
  Verdict v;
  for (int n = 1; n <= 8; ++n) {
    const auto& base = classes(n).avoid_132;
    auto size = [&](const Permutation& tau) {
      std::size_t c = 0;
      for (const auto& p : base) c += avoids(p, tau) ? 1 : 0;
      return c;
    };
    for (int k = 3; k <= 6; ++k) {
      auto where = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };
      v.check(BigInt(size(decreasing_pattern(k))) == decreasing_avoider_formula(n, k), where);
      const auto increasing = size(increasing_pattern(k));
      v.check(size(two_one_three_pattern(k)) == increasing, where);
      v.check(size(shifted_pattern(2, k)) == increasing, where);
      v.check(size(shifted_pattern(k, k)) == increasing, where);
      for (int s = 2; s <= k; ++s) v.check(size(shifted_pattern(s, k)) == increasing, where);
    }
  }
  return v;
}

Verdict mu_bijection() {
  Verdict v;
  for (int n = 1; n <= 9; ++n) {
    const auto young = staircase_partitions(n);
    for (int s = 2; s <= 4; ++s) {
      std::set<Partition> image;
      for (const auto& lambda : young) {
        const auto mu = mu_map(lambda, n, s);
        auto where = [&] { return "n=" + std::to_string(n) + " s=" + std::to_string(s) + " lambda=" + lambda.to_string(); };
        v.check(fits_staircase(mu, n) && mu_map_inverse(mu, n, s) == lambda, where);
        image.insert(mu);
        if (n > 8) continue;
        const int l = longest_increasing_length(permutation_from_partition(lambda, n));
        if (l >= s - 1) v.check(shifted_length(permutation_from_partition(mu, n), s) == l, where);
      }
      v.check(image.size() == young.size(), "image size n=" + std::to_string(n));
    }
  }
  return v;
}

Verdict distributions() {
  Verdict v;
  for (int n = 1; n <= 9; ++n) {
    const auto des = distribution(classes(n).avoid_132, Statistic::Des);
    const auto returns = distribution(classes(n).avoid_132, Statistic::Returns);
    const auto diagonal = partition_distribution(n, PartitionStatistic::DiagonalCorners);
    for (int k = 1; k <= n; ++k) {
      auto where = [&] { return "n=" + std::to_string(n) + " k=" + std::to_string(k); };
      v.check(BigInt(des.count(k - 1)) == narayana(n, k), where);
      v.check(BigInt(returns.count(k)) == ballot(n - 1, n - k), where);
      v.check(BigInt(diagonal.count(k - 1)) == ballot(n - 1, n - k), where);
    }
  }
  return v;
}

Verdict round_trips() {
  Verdict v;
  for (int n = 1; n <= 8; ++n) {
    for (const auto& p : classes(n).avoid_321) {
      v.check(phi_inverse(phi(p)) == p, [&] { return "phi p=" + p.to_string(); });
      v.check(psi_bjs_inverse(psi_bjs(p)) == p, [&] { return "psi_bjs p=" + p.to_string(); });
    }
    for (const auto& s : classes(n).avoid_132) {
      v.check(phi(phi_inverse(s)) == s, [&] { return "phi^-1 s=" + s.to_string(); });
      v.check(psi_k_inverse(psi_k(s)) == s, [&] { return "psi_k s=" + s.to_string(); });
    }
  }
  for (int n = 1; n <= 10; ++n) {
    for (const auto& lambda : staircase_partitions(n)) {
      v.check(path_partition(partition_path(lambda, n)) == lambda, [&] { return "path lambda=" + lambda.to_string(); });
      if (n <= 9) {
        v.check(require_dominant_partition(permutation_from_partition(lambda, n)) == lambda,
                [&] { return "perm lambda=" + lambda.to_string(); });
      }
    }
  }
  for (int n = 1; n <= 9; ++n) {
    for (const auto& s : classes(n).avoid_132) {
      v.check(permutation_from_partition(require_dominant_partition(s), n) == s, [&] { return "s=" + s.to_string(); });
    }
  }
  for (int n = 1; n <= 7; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      v.check(build_diagram(inverse(p)) == build_diagram(p).transpose(), [&] { return "transpose p=" + p.to_string(); });
    });
  }
  return v;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Catalan counts of S_n(132), S_n(321), n<=10", catalan_counts},
      {2, "golden vectors", golden_vectors},
      {3, "psi_bjs = psi_k . phi on S_n(321), n<=8", paths_agree},
      {4, "excedances/descents and left-to-right minima, n<=8", excedances_and_minima},
      {5, "rank sum = 132 count on S_n, n<=7", rank_sum},
      {6, "height sums, middle height, returns, n<=8", height_statistics},
      {7, "Durfee rank counts and q-triangle, n<=14", rank_counts},
      {8, "diagram and height criteria vs brute force, n<=8, k=3..6", diagram_criteria},
      {9, "decreasing-class formula and coinciding class sizes, n<=8, k=3..6", class_sizes},
      {10, "mu bijection n<=9 and l -> l_s transport n<=8, s=2..4", mu_bijection},
      {11, "Narayana and ballot distributions, n<=9", distributions},
      {12, "round trips", round_trips},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Verdict v = c.run();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line << "CRITERION " << c.id << ' ' << (v.pass ? "PASS" : "FAIL") << ' ' << c.title << " cases=" << v.cases;
    char timing[32];
    std::snprintf(timing, sizeof timing, " time=%.2fs", seconds);
    line << timing;
    if (!v.pass) line << " first_failure=" << v.first_failure;
    std::cout << line.str() << std::endl;
    if (!v.pass) ++failures;
  }
  std::cout << "ACCEPTANCE " << (criteria.size() - static_cast<std::size_t>(failures)) << '/' << criteria.size()
            << " passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
