#include "monohier/fock.hpp"

#include <benchmark/benchmark.h>

using namespace monohier;
using namespace monohier::fock;

namespace {

SupportProfile banded_profile(int length) {
    std::vector<IntervalIndicator> parts;
    IntervalIndicator low(0, 1), high(1, 2);
    for (int p = 0; p < length; ++p) parts.push_back(p % 3 == 0 ? high : low);
    return SupportProfile(std::move(parts));
}

} // namespace

static void BM_GaussianMoment(benchmark::State& state) {
    auto profile = banded_profile(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto v = gaussian_moment(Level::finite(2), profile);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_GaussianMoment)->Arg(4)->Arg(6)->Arg(8);

static void BM_PartitionSumMoment(benchmark::State& state) {
    auto profile = banded_profile(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto v = partition_sum_moment(Level::finite(2), profile);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_PartitionSumMoment)->Arg(4)->Arg(6)->Arg(8);

BENCHMARK_MAIN();
