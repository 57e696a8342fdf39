// Throughput of the main entry points on generated bull-free instances.
// Arguments are (model index, n) unless noted.
#include <bullfree/basic.hpp>
#include <bullfree/coloring.hpp>
#include <bullfree/decomposition.hpp>
#include <bullfree/kernel.hpp>
#include <bullfree/solver.hpp>
#include <bullfree/testkit.hpp>

#include <benchmark/benchmark.h>

using namespace bullfree;
using testkit::GenModel;

namespace {

WeightedTrigraph instance(int model, int n, double switchable = 0.0, std::uint64_t seed = 7) {
    testkit::GenSpec s;
    s.model = static_cast<GenModel>(model);
    s.n = n;
    s.seed = seed;
    s.density = 0.3;
    s.switchable = switchable;
    return testkit::generate(s);
}

void label(benchmark::State& state, int model, int n) {
    state.SetLabel(testkit::to_string(static_cast<GenModel>(model)));
    state.counters["n"] = n;
}

void models(benchmark::internal::Benchmark* b, std::initializer_list<int> sizes) {
    for (int m = 0; m < 6; ++m)
        for (int n : sizes) b->Args({m, n});
}

void BM_FindBull(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
    auto t = instance(m, n, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(find_bull(t.base()));
    label(state, m, n);
}
BENCHMARK(BM_FindBull)->Apply([](auto* b) { models(b, {50, 200}); })->Unit(benchmark::kMicrosecond);

void BM_FindMinCut(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
    auto t = instance(m, n, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(find_min_cut(t.base()));
    label(state, m, n);
}
BENCHMARK(BM_FindMinCut)->Apply([](auto* b) { models(b, {30, 80}); })->Unit(benchmark::kMillisecond);

// (model, n, W)
void BM_Solve(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
    const Weight w = state.range(2);
    auto t = instance(m, n, 0.2);
    SolveOptions opt;
    opt.keep_path = false;
    for (auto _ : state) benchmark::DoNotOptimize(solve(t, w, opt));
    label(state, m, n);
    state.counters["W"] = static_cast<double>(w);
}
BENCHMARK(BM_Solve)
    ->Apply([](auto* b) {
        for (int m = 0; m < 6; ++m)
            for (int w : {3, 6}) b->Args({m, 60, w});
    })
    ->Unit(benchmark::kMillisecond);

void BM_EnumerateMaxStable(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto t = instance(static_cast<int>(GenModel::T1Complement), n);
    std::size_t sets = 0;
    for (auto _ : state) {
        auto e = enumerate_max_stable(t.base(), cube_cutoff(n));
        sets = e.sets.size();
        benchmark::DoNotOptimize(e);
    }
    state.counters["n"] = n;
    state.counters["sets"] = static_cast<double>(sets);
}
BENCHMARK(BM_EnumerateMaxStable)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_ExactLeafMwis(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto t = instance(static_cast<int>(GenModel::Reject), n, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(exact_leaf_mwis(t));
    state.counters["n"] = n;
}
BENCHMARK(BM_ExactLeafMwis)->Arg(20)->Arg(40)->Arg(80)->Unit(benchmark::kMillisecond);

void BM_BruteAlpha(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto t = instance(static_cast<int>(GenModel::Reject), n, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(testkit::brute_alpha(t));
    state.counters["n"] = n;
}
BENCHMARK(BM_BruteAlpha)->Arg(12)->Arg(16)->Arg(20)->Unit(benchmark::kMillisecond);

// (n, k), local enumeration off so every leaf becomes a query
void BM_KernelQueries(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const Weight k = state.range(1);
    auto t = instance(static_cast<int>(GenModel::Substitution), n);
    KernelOptions opt;
    opt.local_enumeration = false;
    std::size_t queries = 0;
    for (auto _ : state) {
        auto tr = solve_with_oracle(t, k, exact_oracle(), opt);
        queries = tr.queries.size();
        benchmark::DoNotOptimize(tr);
    }
    state.counters["n"] = n;
    state.counters["queries"] = static_cast<double>(queries);
}
BENCHMARK(BM_KernelQueries)->Args({30, 4})->Args({60, 4})->Args({60, 8})->Unit(benchmark::kMillisecond);

void BM_Semicolor(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
    auto g = instance(m, n).base();
    for (auto _ : state) benchmark::DoNotOptimize(semicolor(g));
    label(state, m, n);
}
BENCHMARK(BM_Semicolor)->Apply([](auto* b) { models(b, {40}); })->Unit(benchmark::kMillisecond);

void BM_ChiColor(benchmark::State& state) {
    const int m = static_cast<int>(state.range(0)), n = static_cast<int>(state.range(1));
    auto g = instance(m, n).base();
    for (auto _ : state) benchmark::DoNotOptimize(chi_color(g));
    label(state, m, n);
}
BENCHMARK(BM_ChiColor)->Apply([](auto* b) { models(b, {40}); })->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
