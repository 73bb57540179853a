#include <benchmark/benchmark.h>

#include "bentcat/construct.hpp"
#include "bentcat/msubspace.hpp"
#include "bentcat/random.hpp"
#include "bentcat/text_format.hpp"
#include "bentcat/transforms.hpp"

namespace {

using namespace bentcat;

constexpr const char* kOutside8 =
    "aa6966000fa5ccc3472109a3421765fcaa6966000fa5ccc3b8def65cbde89a03";

void BM_WalshTransform(benchmark::State& state) {
  Rng rng(1);
  const auto f = random_function(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(walsh_transform(f));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(f.size()));
}
BENCHMARK(BM_WalshTransform)->DenseRange(6, 16, 2);

void BM_PairRelation(benchmark::State& state) {
  Rng rng(2);
  const auto f = random_bent(static_cast<int>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(PairRelation(f));
}
BENCHMARK(BM_PairRelation)->DenseRange(6, 12, 2)->Unit(benchmark::kMillisecond);

void BM_SearchInside(benchmark::State& state) {
  Rng rng(3);
  const int n = static_cast<int>(state.range(0));
  const auto f = random_bent(n, rng);
  const PairRelation relation(f);
  std::uint64_t nodes = 0;
  for (auto _ : state) {
    const auto outcome = search_m_subspaces(relation, n / 2, {.max_results = 1});
    nodes = outcome.nodes;
  }
  state.counters["nodes"] = static_cast<double>(nodes);
}
BENCHMARK(BM_SearchInside)->DenseRange(6, 12, 2)->Unit(benchmark::kMicrosecond);

void BM_SearchOutside(benchmark::State& state) {
  const auto f = from_hex(8, kOutside8);
  const PairRelation relation(f);
  for (auto _ : state) benchmark::DoNotOptimize(search_m_subspaces(relation, 4));
}
BENCHMARK(BM_SearchOutside)->Unit(benchmark::kMicrosecond);

void BM_GhghClassTenVariables(benchmark::State& state) {
  Rng rng(4);
  const auto g = from_hex(8, kOutside8);
  const auto h = random_bent(8, rng);
  const auto f = ghgh(g, h);
  for (auto _ : state) benchmark::DoNotOptimize(is_in_completed_mm(f));
}
BENCHMARK(BM_GhghClassTenVariables)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
