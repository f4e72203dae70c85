#include "selfloop/bounds.hpp"
#include "selfloop/charpoly.hpp"
#include "selfloop/construct.hpp"
#include "selfloop/harness.hpp"
#include "selfloop/spectrum.hpp"

#include <benchmark/benchmark.h>

namespace {

selfloop::LoopedGraph sample(int n) {
    selfloop::harness::CampaignConfig config;
    config.n_min = n;
    config.n_max = n;
    config.edge_probs = {0.5};
    return selfloop::harness::random_instance(config, 0);
}

void BM_EigSym(benchmark::State& state) {
    const auto a = selfloop::adjacency(sample(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(selfloop::eig_sym(a));
}
BENCHMARK(BM_EigSym)->RangeMultiplier(2)->Range(8, 128);

void BM_EigSymUnverified(benchmark::State& state) {
    const auto a = selfloop::adjacency(sample(static_cast<int>(state.range(0))));
    selfloop::EigOptions options;
    options.verify = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(selfloop::eig_sym(a, options));
}
BENCHMARK(BM_EigSymUnverified)->RangeMultiplier(2)->Range(8, 128);

void BM_CharpolyExact(benchmark::State& state) {
    const auto a = selfloop::adjacency(sample(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(selfloop::charpoly_exact(a));
}
BENCHMARK(BM_CharpolyExact)->DenseRange(8, 32, 8);

void BM_CharpolyBigInteger(benchmark::State& state) {
    const auto a = selfloop::adjacency(sample(static_cast<int>(state.range(0))));
    for (auto _ : state)
        benchmark::DoNotOptimize(selfloop::charpoly_exact(a, selfloop::CharpolyArithmetic::BigIntegerOnly));
}
BENCHMARK(BM_CharpolyBigInteger)->DenseRange(8, 32, 8);

void BM_EvaluateAll(benchmark::State& state) {
    const auto gs = sample(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(selfloop::evaluate_all(gs));
}
BENCHMARK(BM_EvaluateAll)->DenseRange(4, 16, 4);

void BM_LineGraphIdentity(benchmark::State& state) {
    const auto g = sample(static_cast<int>(state.range(0))).base();
    for (auto _ : state)
        benchmark::DoNotOptimize(selfloop::verify_linegraph_identity(g));
}
BENCHMARK(BM_LineGraphIdentity)->DenseRange(5, 9, 2);

} // namespace

BENCHMARK_MAIN();
