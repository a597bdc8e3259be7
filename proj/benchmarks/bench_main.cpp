#include <benchmark/benchmark.h>

#include <cmath>

#include "conifold/dubrovin.hpp"
#include "conifold/pl_stokes.hpp"
#include "conifold/random_config.hpp"

using namespace conifold;

namespace {

CycleConfig a2() {
    return {IntersectionLattice::symplectic(4), {make_vector({1, 0, 0, 0}), make_vector({0, 0, 1, 0})}};
}

void BM_CommutatorCorpus(benchmark::State& state) {
    const auto corpus = random_corpus(1, static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        std::size_t agree = 0;
        for (const auto& c : corpus)
            for (std::size_t i = 0; i < c.size(); ++i)
                for (std::size_t j = 0; j < c.size(); ++j)
                    if (i != j) agree += commutator_nilpotent(c, i, j).agree;
        benchmark::DoNotOptimize(agree);
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_CommutatorCorpus)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

void BM_GroupExplore(benchmark::State& state) {
    const auto c = a2();
    for (auto _ : state) {
        const auto g = group_explore(c, static_cast<std::size_t>(state.range(0)));
        benchmark::DoNotOptimize(g.element_count);
    }
}
BENCHMARK(BM_GroupExplore)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_IntegrateLoop(benchmark::State& state) {
    LoopOptions opt;
    opt.tol = std::pow(10.0, -static_cast<double>(state.range(0)));
    for (auto _ : state) {
        const auto m = integrate_loop(opt);
        benchmark::DoNotOptimize(m.deviation_norm);
        state.counters["steps"] = static_cast<double>(m.steps.accepted);
    }
}
BENCHMARK(BM_IntegrateLoop)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMicrosecond);

}

BENCHMARK_MAIN();
