#include <benchmark/benchmark.h>

#include <numeric>

#include "tracegen/analysis.hpp"
#include "tracegen/laws.hpp"
#include "tracegen/mobius.hpp"
#include "tracegen/sampler.hpp"
#include "tracegen/stream.hpp"

using namespace tracegen;

namespace {

DependenceGraph dimer_chain(int n) {
    std::vector<std::string> names;
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
        names.push_back("l" + std::to_string(i));
    for (int i = 0; i + 1 < n; ++i)
        edges.emplace_back(names[static_cast<size_t>(i)], names[static_cast<size_t>(i + 1)]);
    return DependenceGraph(names, edges);
}

void BM_MobiusPoly(benchmark::State& state) {
    DependenceGraph g = dimer_chain(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(mobius_poly(g, g.all()));
}
BENCHMARK(BM_MobiusPoly)->Arg(8)->Arg(16)->Arg(32);

void BM_CriticalRoot(benchmark::State& state) {
    DependenceGraph g = dimer_chain(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(critical_root(g, g.all()));
}
BENCHMARK(BM_CriticalRoot)->Arg(4)->Arg(8)->Arg(16);

void BM_SampleFinite(benchmark::State& state) {
    DependenceGraph g = dimer_chain(static_cast<int>(state.range(0)));
    double p = 0.8 * critical_root(g, g.all()).value;
    MobiusTable table(g, p);
    Rng rng(1);
    std::size_t letters = 0;
    for (auto _ : state) {
        Trace x = sample_finite(table, g.all(), g.all(), rng);
        letters += x.length();
        benchmark::DoNotOptimize(x);
    }
    state.counters["letters"] =
        benchmark::Counter(static_cast<double>(letters), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_SampleFinite)->Arg(4)->Arg(8)->Arg(16);

void BM_StreamStep(benchmark::State& state) {
    DependenceGraph g = dimer_chain(static_cast<int>(state.range(0)));
    SamplerConfig cfg;
    auto mode = state.range(1) ? PrefixStream::Mode::rejection : PrefixStream::Mode::direct;
    PrefixStream stream(g, cfg, mode);
    std::size_t letters = 0;
    for (auto _ : state) {
        Trace inc = stream.step();
        letters += inc.length();
        benchmark::DoNotOptimize(inc);
    }
    state.counters["letters"] =
        benchmark::Counter(static_cast<double>(letters), benchmark::Counter::kIsRate);
}
BENCHMARK(BM_StreamStep)->Args({4, 0})->Args({4, 1})->Args({8, 0})->Args({8, 1})->Args({12, 1});

void BM_CfNormalForm(benchmark::State& state) {
    DependenceGraph g = dimer_chain(8);
    SamplerConfig cfg;
    PrefixStream stream(g, cfg, PrefixStream::Mode::direct);
    while (stream.prefix().length() < static_cast<std::size_t>(state.range(0)))
        (void)stream.step();
    Trace x = stream.prefix();
    for (auto _ : state)
        benchmark::DoNotOptimize(cf_normal_form(g, x));
}
BENCHMARK(BM_CfNormalForm)->Arg(256)->Arg(4096);

} // namespace

BENCHMARK_MAIN();
