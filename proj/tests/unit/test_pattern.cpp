#include "doctest.h"
#include "helpers.hpp"
#include "permdiag/pattern.hpp"

using namespace permdiag;
using namespace permdiag::testing;

namespace {

// Straight enumeration of index subsets; independent of the pruned search.
std::uint64_t naive_occurrences(const Permutation& p, const Permutation& tau) {
  const int n = p.size();
  const int k = tau.size();
  std::uint64_t count = 0;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    std::vector<int> picked;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) picked.push_back(p(i + 1));
    }
    bool ok = true;
    for (int a = 0; a < k && ok; ++a) {
      for (int b = 0; b < k && ok; ++b) {
        ok = (picked[static_cast<std::size_t>(a)] < picked[static_cast<std::size_t>(b)]) == (tau(a + 1) < tau(b + 1));
      }
    }
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_SUITE("pattern") {
  TEST_CASE("occurrence counts from the worked example") {
    const auto p = perm("4 2 8 3 6 9 7 5 1 10");
    CHECK(occurrences(p, perm("1 3 2")) == 20);
    CHECK(occurrences(p, perm("2 1")) == 18);
    CHECK(occurrences(Permutation::identity(7), Permutation::identity(3)) == 35);
    CHECK(occurrences(perm("1 2"), perm("1 2 3")) == 0);
  }

  TEST_CASE("pruned search agrees with naive enumeration") {
    const std::vector<Permutation> patterns{perm("1 3 2"), perm("2 1 3"), perm("3 1 4 2"), perm("1 2 3 4")};
    for_each_permutation(7, [&](const Permutation& p) {
      for (const auto& tau : patterns) CHECK(occurrences(p, tau) == naive_occurrences(p, tau));
    });
  }

  TEST_CASE("avoidance and enumeration") {
    CHECK(avoids(perm("8 9 5 4 6 7 2 3 10 1"), pattern_132()));
    CHECK_FALSE(avoids(perm("1 3 2"), pattern_132()));
    const std::vector<Permutation> p132{pattern_132()};
    CHECK(enumerate_avoiders(4, p132).size() == 14);
    const std::vector<Permutation> two{pattern_132(), decreasing_pattern(4)};
    CHECK(enumerate_avoiders(5, two).size() == 31);
  }

  TEST_CASE("enumeration cap") {
    const std::vector<Permutation> p132{pattern_132()};
    CHECK(error_of([&] { enumerate_avoiders(12, p132); }) == ErrorCode::SizeTooLarge);
    CHECK(error_of([&] { enumerate_avoiders(5, p132, 4); }) == ErrorCode::SizeTooLarge);
  }

  TEST_CASE("pattern constructors") {
    CHECK(decreasing_pattern(4) == perm("4 3 2 1"));
    CHECK(increasing_pattern(3) == perm("1 2 3"));
    CHECK(two_one_three_pattern(5) == perm("2 1 3 4 5"));
    CHECK(shifted_pattern(2, 5) == perm("2 3 4 5 1"));
    CHECK(shifted_pattern(3, 4) == perm("3 4 1 2"));
    CHECK(shifted_pattern(1, 3) == perm("1 2 3"));
    CHECK(error_of([] { shifted_pattern(5, 4); }) == ErrorCode::BadS);
  }
}
