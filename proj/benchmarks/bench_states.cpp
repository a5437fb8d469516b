#include "monohier/states.hpp"
#include "monohier/verify.hpp"

#include <benchmark/benchmark.h>

using namespace monohier;

namespace {

states::AlgebraRegistry registry_of_two() {
    states::AlgebraRegistry reg;
    reg.add(verify::random_marginal(4, 1, 3, 16));
    reg.add(verify::random_marginal(9, 2, 3, 16));
    return reg;
}

states::Word alternating_word(int length) {
    states::Word word;
    for (int p = 0; p < length; ++p)
        word.push_back(states::WordLetter::generator(p % 2 + 1));
    return word;
}

} // namespace

static void BM_RewriteAlternating(benchmark::State& state) {
    auto reg = registry_of_two();
    auto word = alternating_word(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto v = states::evaluate_word(word, Level::finite(2), reg);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_RewriteAlternating)->DenseRange(4, 8);

static void BM_RepresentationMoment(benchmark::State& state) {
    auto reg = registry_of_two();
    states::ProductSpace space(Level::finite(2), {reg.at(1), reg.at(2)});
    auto word = alternating_word(static_cast<int>(state.range(0)));
    for (auto _ : state) {
        auto v = states::vacuum_moment(space, word);
        benchmark::DoNotOptimize(v);
    }
}
BENCHMARK(BM_RepresentationMoment)->DenseRange(4, 8);

static void BM_FiniteSumMoment(benchmark::State& state) {
    states::AlgebraSpec bernoulli(1, {1, 0, 1, 0, 1, 0, 1, 0, 1}, 2);
    const int order = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto v = states::sum_moment_finite(Level::finite(2), 16, order, bernoulli);
        benchmark::DoNotOptimize(v.value);
    }
}
BENCHMARK(BM_FiniteSumMoment)->Arg(4)->Arg(6);

BENCHMARK_MAIN();
