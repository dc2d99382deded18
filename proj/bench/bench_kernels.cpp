// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "mgc/complex.hpp"

namespace {

mgc::Execution mode(const benchmark::State& state) {
    return state.range(3) ? mgc::Execution::parallel : mgc::Execution::serial;
}

void BM_enumerate(benchmark::State& state) {
    const int g = state.range(0), n = state.range(1), r = state.range(2);
    for (auto _ : state) benchmark::DoNotOptimize(mgc::enumerate_marked_graphs(g, n, r, mode(state)));
}

void BM_differential(benchmark::State& state) {
    const int g = state.range(0), n = state.range(1), r = state.range(2);
    mgc::BuildOptions opts;
    opts.exec = mgc::Execution::serial;
    const auto c = mgc::build_complex(g, n, r, opts);
    for (auto _ : state)
        for (int i = 1; i <= c.top_degree(); ++i)
            benchmark::DoNotOptimize(mgc::assemble_differential(c, i, mode(state)));
}

// {g, n, r, parallel}
void sizes(benchmark::internal::Benchmark* b) {
    for (int par : {0, 1}) {
        b->Args({2, 5, 5, par});
        b->Args({2, 6, 6, par});
        b->Args({3, 6, 7, par});
    }
    b->ArgNames({"g", "n", "r", "parallel"})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(BM_enumerate)->Apply(sizes);
BENCHMARK(BM_differential)->Apply(sizes);

BENCHMARK_MAIN();
