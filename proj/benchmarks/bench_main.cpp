#include <benchmark/benchmark.h>

#include "permdiag/bijection.hpp"
#include "permdiag/diagram.hpp"
#include "permdiag/dyck.hpp"
#include "permdiag/enumeration.hpp"
#include "permdiag/identities.hpp"
#include "permdiag/pattern.hpp"
#include "permdiag/shifted.hpp"

using namespace permdiag;

namespace {

void BM_Occurrences132(benchmark::State& state) {
  const auto p = Permutation::parse("4 2 8 3 6 9 7 5 1 10");
  const auto tau = pattern_132();
  for (auto _ : state) benchmark::DoNotOptimize(occurrences(p, tau));
}
BENCHMARK(BM_Occurrences132);

void BM_RankSum(benchmark::State& state) {
  const auto p = Permutation::parse("4 2 8 3 6 9 7 5 1 10");
  for (auto _ : state) benchmark::DoNotOptimize(count_132_by_rank(p));
}
BENCHMARK(BM_RankSum);

void BM_Phi(benchmark::State& state) {
  const auto p = Permutation::parse("1 4 7 2 3 8 5 6 10 9");
  for (auto _ : state) benchmark::DoNotOptimize(phi(p));
}
BENCHMARK(BM_Phi);

void BM_PsiK(benchmark::State& state) {
  const auto p = Permutation::parse("8 9 5 4 6 7 2 3 10 1");
  for (auto _ : state) benchmark::DoNotOptimize(psi_k(p));
}
BENCHMARK(BM_PsiK);

void BM_Enumerate132(benchmark::State& state) {
  const std::vector<Permutation> patterns{pattern_132()};
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_avoiders(n, patterns).size());
}
BENCHMARK(BM_Enumerate132)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_StaircasePartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    std::size_t count = 0;
    for_each_staircase_partition(n, [&](const Partition&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_StaircasePartitions)->DenseRange(8, 14, 2)->Unit(benchmark::kMillisecond);

void BM_MuMapSweep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto young = staircase_partitions(n);
  for (auto _ : state) {
    for (const auto& lambda : young) benchmark::DoNotOptimize(mu_map(lambda, n, 3));
  }
}
BENCHMARK(BM_MuMapSweep)->DenseRange(6, 9)->Unit(benchmark::kMillisecond);

void BM_VerifyIdentities(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_identities(n).failures());
}
BENCHMARK(BM_VerifyIdentities)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
