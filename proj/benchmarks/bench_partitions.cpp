#include "monohier/partitions.hpp"

#include <benchmark/benchmark.h>

using namespace monohier;

static void BM_EnumeratePairs(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        long count = 0;
        partitions::enumerate_ordered_noncrossing(2 * k, Level::finite(2), true,
                                                  [&](const partitions::OrderedPartition&) {
                                                      ++count;
                                                  });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_EnumeratePairs)->DenseRange(3, 6);

static void BM_CountPairsRecurrence(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto n = partitions::count_pair_partitions(k, Level::finite(4));
        benchmark::DoNotOptimize(n);
    }
}
BENCHMARK(BM_CountPairsRecurrence)->Arg(8)->Arg(12)->Arg(16);

static void BM_CountByBlocks(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto c = partitions::count_partitions_by_blocks(n, n / 2, Level::finite(3));
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_CountByBlocks)->Arg(8)->Arg(10)->Arg(12);

BENCHMARK_MAIN();
