#include <benchmark/benchmark.h>

#include "gspectra/bounds.hpp"
#include "gspectra/counting.hpp"
#include "gspectra/generators.hpp"
#include "gspectra/graph.hpp"
#include "gspectra/spectral.hpp"

using namespace gspectra;

namespace {

Graph random_graph(int n, double p, uint64_t seed) {
    GeneratorSpec spec;
    spec.family = Family::Gnp;
    spec.params = {n};
    spec.p = p;
    spec.seed = seed;
    return generate(spec);
}

void BM_TriangleCountIntersection(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(triangles_by_intersection(g));
    }
}
BENCHMARK(BM_TriangleCountIntersection)->Arg(64)->Arg(256)->Arg(1024);

void BM_TriangleCountNeighborhood(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(triangles_by_neighborhood(g));
    }
}
BENCHMARK(BM_TriangleCountNeighborhood)->Arg(64)->Arg(256)->Arg(1024);

void BM_Eigensolve(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(eigenvalues(g));
    }
}
BENCHMARK(BM_Eigensolve)->Arg(32)->Arg(128)->Arg(512);

void BM_CliqueNumber(benchmark::State& state) {
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(clique_number(g));
    }
}
BENCHMARK(BM_CliqueNumber)->Arg(32)->Arg(64)->Arg(128);

void BM_FullGraphFacts6(benchmark::State& state) {
    // the per-graph cost that dominates exhaustive corpus sweeps
    Graph g = labeled_graph(6, 0x5555);
    for (auto _ : state) {
        benchmark::DoNotOptimize(analyze_graph(g));
    }
}
BENCHMARK(BM_FullGraphFacts6);

}  // namespace

BENCHMARK_MAIN();
