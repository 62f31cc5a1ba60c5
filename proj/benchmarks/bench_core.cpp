#include <benchmark/benchmark.h>

#include <numbers>
#include <random>

#include "mpsorf/fft.hpp"
#include "mpsorf/scenario.hpp"

using namespace mpsorf;

namespace {

SchurParams make_params(int n) {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ur(0.0, 1.0);
    std::vector<cplx> gs;
    for (int k = 0; k <= n; ++k)
        gs.push_back(std::polar(0.6 * std::sqrt(ur(rng)), 6.28 * ur(rng)));
    return SchurParams(std::move(gs));
}

}  // namespace

static void BM_WallChainPoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SchurParams p = make_params(n);
    const AlphaSequence a = AlphaSequence::radial(n + 2, {1.0, 0.0});
    const cplx t = std::polar(1.0, 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(wall_chain(p, a, n, t));
}
BENCHMARK(BM_WallChainPoint)->Arg(10)->Arg(40)->Arg(160);

static void BM_OrfChainPoint(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const SchurParams p = make_params(n);
    const AlphaSequence a = AlphaSequence::radial(n + 2, {1.0, 0.0});
    const cplx t = std::polar(1.0, 0.7);
    for (auto _ : state) benchmark::DoNotOptimize(orf_chain(p, a, n, t));
}
BENCHMARK(BM_OrfChainPoint)->Arg(10)->Arg(40);

static void BM_RemainderChainGrid(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    const SchurFunction f = SchurFunction::scaled_identity({0.5, 0.0});
    const AlphaSequence a = AlphaSequence::radial(42, {1.0, 0.0});
    const CircleGrid grid(m);
    const SchurParams p = schur_parameters(f, a, 41, grid);
    for (auto _ : state)
        benchmark::DoNotOptimize(remainder_chain_on_grid(f, a, p, 40, grid));
    state.SetItemsProcessed(state.iterations() * int64_t(m) * 40);
}
BENCHMARK(BM_RemainderChainGrid)->Arg(4096)->Arg(16384);

static void BM_SchurParametersGrid(benchmark::State& state) {
    const SchurFunction f = SchurFunction::scaled_identity({0.5, 0.0});
    const AlphaSequence a = AlphaSequence::radial(42, {1.0, 0.0});
    const CircleGrid grid(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(schur_parameters(f, a, 41, grid));
}
BENCHMARK(BM_SchurParametersGrid)->Arg(4096);

static void BM_ConjugateFunction(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0));
    std::vector<double> d(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j)
        d[static_cast<std::size_t>(j)] = 1.0 + 0.5 * std::cos(2.0 * std::numbers::pi * j / m);
    for (auto _ : state) benchmark::DoNotOptimize(detail::conjugate_function(d));
    state.SetItemsProcessed(state.iterations() * int64_t(m));
}
BENCHMARK(BM_ConjugateFunction)->Arg(4096)->Arg(65536);

static void BM_GramSchmidt(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const CircleGrid grid(4096);
    const CircleMeasure mu =
        measure_from_schur(SchurFunction::scaled_identity({0.5, 0.0}), grid, true);
    const AlphaSequence a = AlphaSequence::explicit_list(
        {{0.0, 0.0}, {0.3, 0.0}, {0.0, 0.5}, {-0.4, 0.0}}, false, n + 2, true);
    for (auto _ : state) benchmark::DoNotOptimize(orf_gram_schmidt(mu, a, n));
}
BENCHMARK(BM_GramSchmidt)->Arg(6)->Arg(12);

static void BM_RunScenario(benchmark::State& state) {
    Scenario s = builtin_scenario("half-z-radial");
    s.grid_m = static_cast<int>(state.range(0));
    s.n_max = 16;
    RunOptions opt;
    opt.jobs = static_cast<int>(state.range(1));
    for (auto _ : state) benchmark::DoNotOptimize(run_scenario(s, opt));
}
BENCHMARK(BM_RunScenario)->Args({1024, 1})->Args({4096, 1})->Args({4096, 4})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
