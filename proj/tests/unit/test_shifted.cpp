#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "permdiag/bijection.hpp"
#include "permdiag/pattern.hpp"
#include "permdiag/shifted.hpp"

using namespace permdiag;
using namespace permdiag::testing;

namespace {

// Largest l with an occurrence of s(s+1)...l 1...(s-1); s-1 if none.
int brute_shifted_length(const Permutation& p, int s) {
  int l = s - 1;
  for (int k = s; k <= p.size() && contains_pattern(p, shifted_pattern(s, k)); ++k) l = k;
  return l;
}

}  // namespace

TEST_SUITE("shifted") {
  const auto sigma = perm("8 9 5 4 6 7 2 3 10 1");

  TEST_CASE("a, b and h of the worked example") {
    const auto abh = abh_profile(sigma);
    CHECK(abh.lambda == part({7, 7, 4, 3, 3, 3, 1, 1, 1}));
    CHECK(abh.a == std::vector<int>{2, 1, 3, 3, 2, 1, 2, 1, 0});
    CHECK(abh.b == std::vector<int>{0, 2, 1, 3, 3, 2, 1});
    CHECK(abh.h == std::vector<int>{3, 3, 1, 2, 2, 2, 1, 1, 1});
    CHECK(abh.a_bar == abh.a);
  }

  TEST_CASE("identity profile is empty") {
    const auto abh = abh_profile(Permutation::identity(4));
    CHECK(abh.a.empty());
    CHECK(abh.b.empty());
    CHECK(abh.a_bar == std::vector<int>{3, 2, 1});
    for (int s = 2; s <= 4; ++s) CHECK(shifted_length(Permutation::identity(4), s) == s - 1);
    CHECK(error_of([] { abh_profile(perm("1 3 2")); }) == ErrorCode::Not132Avoiding);
  }

  TEST_CASE("profile invariants, n <= 8") {
    const std::vector<Permutation> p132{pattern_132()};
    for (int n = 1; n <= 8; ++n) {
      for (const auto& p : enumerate_avoiders(n, p132)) {
        const auto abh = abh_profile(p);
        CHECK(std::equal(abh.a.begin(), abh.a.end(), abh.a_bar.begin()));
        for (int i = 1; i <= n - 1; ++i) {
          if (abh.lambda.part(i) == 0) CHECK(abh.a_bar[static_cast<std::size_t>(i - 1)] == n - i);
        }
        for (int v : abh.a_bar) CHECK(v >= 0);
        for (int v : abh.b) CHECK(v >= 0);
        for (int v : abh.h) CHECK(v >= 1);
      }
    }
  }

  TEST_CASE("l_s of the worked example") {
    CHECK(shifted_length(sigma, 2) == 5);
    CHECK(contains_pattern(sigma, perm("2 3 4 5 1")));
    CHECK(avoids(sigma, perm("2 3 4 5 6 1")));
    CHECK(avoids_shifted_by_diagram(sigma, 2, 6));
    CHECK_FALSE(avoids_shifted_by_diagram(sigma, 2, 5));
    CHECK(error_of([] { shifted_length(perm("1 2"), 1); }) == ErrorCode::BadS);
    CHECK(error_of([&] { avoids_shifted_by_diagram(sigma, 2, 2); }) == ErrorCode::BadK);
  }

  TEST_CASE("l_s matches brute force and L is a partition, n <= 8") {
    const std::vector<Permutation> p132{pattern_132()};
    for (int n = 1; n <= 8; ++n) {
      for (const auto& p : enumerate_avoiders(n, p132)) {
        const auto profile = shifted_profile(p);
        for (int s = 2; s <= n; ++s) {
          CHECK(profile.l_values.at(s) == brute_shifted_length(p, s));
          if (s < n) CHECK(profile.l_values.at(s) + 1 >= profile.l_values.at(s + 1));
        }
        CHECK(shifted_profile(inverse(p)).L == conjugate(profile.L));
      }
    }
  }

  TEST_CASE("height criterion matches brute force, n <= 8") {
    const std::vector<Permutation> p132{pattern_132()};
    for (int n = 1; n <= 8; ++n) {
      for (const auto& p : enumerate_avoiders(n, p132)) {
        for (int k = 3; k <= 6; ++k) {
          for (int s = 2; s <= k; ++s) {
            CHECK(avoids_shifted_by_diagram(p, s, k) == avoids(p, shifted_pattern(s, k)));
          }
        }
      }
    }
  }

  TEST_CASE("subsequence lengths of 132-avoiders") {
    const std::vector<Permutation> p132{pattern_132()};
    for (int n = 1; n <= 8; ++n) {
      for (const auto& p : enumerate_avoiders(n, p132)) {
        CHECK(longest_decreasing_length(p) == static_cast<int>(descents(p).size()) + 1);
        CHECK(longest_increasing_length(p) == longest_increasing_from_partition(abh_profile(p).lambda, n));
      }
    }
  }

  TEST_CASE("mu examples") {
    CHECK(mu_map(part({1}), 3, 2) == part({2, 1}));
    CHECK(mu_map(part({2, 1}), 3, 2).empty());
    CHECK(mu_map(part({}), 4, 3) == part({2, 2}));
    CHECK(shifted_length(perm("3 4 1 2"), 3) == 4);
    CHECK(mu_map_inverse(part({2, 2}), 4, 3).empty());
    CHECK(error_of([] { mu_map(part({}), 4, 1); }) == ErrorCode::BadS);
    CHECK(error_of([] { mu_map(part({3}), 3, 2); }) == ErrorCode::DoesNotFitStaircase);
  }

  TEST_CASE("mu is a bijection on Y_n, n <= 9") {
    for (int n = 1; n <= 9; ++n) {
      for (int s = 2; s <= 4; ++s) {
        std::set<Partition> image;
        for (const auto& lambda : staircase_partitions(n)) {
          const auto mu = mu_map(lambda, n, s);
          CHECK(fits_staircase(mu, n));
          CHECK(mu_map_inverse(mu, n, s) == lambda);
          image.insert(mu);
        }
        CHECK(image.size() == staircase_partitions(n).size());
      }
    }
  }

  TEST_CASE("mu transports l to l_s, n <= 8") {
    for (int n = 1; n <= 8; ++n) {
      for (int s = 2; s <= 4; ++s) {
        for (const auto& lambda : staircase_partitions(n)) {
          const int l = longest_increasing_length(permutation_from_partition(lambda, n));
          if (l < s - 1) continue;
          CHECK(shifted_length(permutation_from_partition(mu_map(lambda, n, s), n), s) == l);
        }
      }
    }
  }

  TEST_CASE("the interchange pass separates large and small entries") {
    for (int n = 2; n <= 7; ++n) {
      for (int s = 2; s <= 4; ++s) {
        for (const auto& lambda : staircase_partitions(n)) {
          const auto seq = interchange_sequence(lambda, n, s);
          CHECK(seq.size() == static_cast<std::size_t>(n - 1));
          bool small_seen = false;
          for (int v : seq) {
            if (v < s - 1) small_seen = true;
            else CHECK_FALSE(small_seen);
          }
        }
      }
    }
  }
}
