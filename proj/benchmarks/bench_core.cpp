#include <benchmark/benchmark.h>

#include <vector>

#include "stratakit/expression.hpp"
#include "stratakit/kgroup.hpp"
#include "stratakit/multisegments.hpp"
#include "stratakit/partitions.hpp"

using namespace stratakit;

namespace {

const CuspidalLine rho{"rho", 1, std::nullopt};

// n unit segments at twists 0..n-1; its downset is the largest of its degree.
Multisegment chain(int n) {
  std::vector<Segment> segs;
  for (int i = 0; i < n; ++i) segs.emplace_back(rho, i, i);
  return Multisegment(std::move(segs));
}

void BM_Downset(benchmark::State& state) {
  const auto m = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(downset(m).nodes.size());
}
BENCHMARK(BM_Downset)->DenseRange(3, 7);

void BM_MwDual(benchmark::State& state) {
  const auto m = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mw_dual(m));
}
BENCHMARK(BM_MwDual)->RangeMultiplier(2)->Range(4, 64);

void BM_EnumeratePartitions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_partitions(n).size());
}
BENCHMARK(BM_EnumeratePartitions)->DenseRange(10, 30, 10);

void BM_EnumerateWithSupport(benchmark::State& state) {
  std::vector<SupportEntry> support;
  for (int i = 0; i < state.range(0); ++i) support.push_back({rho, i / 2});
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_with_support(support).size());
}
BENCHMARK(BM_EnumerateWithSupport)->DenseRange(2, 8, 2);

void BM_CheckIdentity(benchmark::State& state) {
  const auto id = parse_identity("D^2(Z[3,3]*Z{[2,2],[0,1]}) = Z{[2,2],[0,0]} + Z[3,3]*Z[0,0]");
  for (auto _ : state) benchmark::DoNotOptimize(check_identity(id.lhs, id.rhs).status);
}
BENCHMARK(BM_CheckIdentity);

}  // namespace

BENCHMARK_MAIN();
