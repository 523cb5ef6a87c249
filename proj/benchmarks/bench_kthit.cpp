#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "kthit/corpus.hpp"
#include "kthit/decomposition.hpp"
#include "kthit/ekt.hpp"
#include "kthit/kernel.hpp"
#include "kthit/oracle.hpp"
#include "kthit/reductions.hpp"

namespace {

using namespace kthit;

// Disjoint triangles and one modulator vertex adjacent to the first two corners of each.
ModulatorInstance fan_instance(int triangles) {
    Graph g(3 * triangles + 1);
    Vertex x = 3 * triangles;
    for (int i = 0; i < triangles; ++i) {
        Vertex a = 3 * i;
        g.add_edge(a, a + 1);
        g.add_edge(a, a + 2);
        g.add_edge(a + 1, a + 2);
        g.add_edge(x, a);
        g.add_edge(x, a + 1);
    }
    return ModulatorInstance{g, {x}, triangles, 3, 1};
}

// n variables and 2n width-3 clauses drawn uniformly at random.
CnfFormula random_formula(int n, Rng& rng) {
    std::uniform_int_distribution<int> var(1, n);
    CnfFormula phi{n, {}};
    for (int j = 0; j < 2 * n; ++j) {
        std::vector<int> clause;
        for (int i = 0; i < 3; ++i) clause.push_back(rng() % 2 ? var(rng) : -var(rng));
        phi.clauses.push_back(clause);
    }
    return phi;
}

void BM_BedValueChain(benchmark::State& state) {
    Graph g = triangle_chain(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(bed_value(g, 3, 8));
}
BENCHMARK(BM_BedValueChain)->RangeMultiplier(2)->Range(1, 32);

void BM_BedValueRandom(benchmark::State& state) {
    Rng rng(7);
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.3, rng);
    for (auto _ : state) benchmark::DoNotOptimize(bed_value(g, 3, 4));
}
BENCHMARK(BM_BedValueRandom)->DenseRange(8, 14, 2);

void BM_SolveEktChain(benchmark::State& state) {
    ExtendedInstance inst{triangle_chain(static_cast<int>(state.range(0))), {}, 3};
    for (auto _ : state) benchmark::DoNotOptimize(solve_ekt(inst, {1, 0}));
}
BENCHMARK(BM_SolveEktChain)->RangeMultiplier(2)->Range(1, 32);

void BM_Kernelize(benchmark::State& state) {
    ModulatorInstance inst = fan_instance(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(kernelize(inst));
}
BENCHMARK(BM_Kernelize)->RangeMultiplier(2)->Range(1, 16);

void BM_MmbsGraph(benchmark::State& state) {
    Rng rng(11);
    Graph g = random_graph(static_cast<int>(state.range(0)), 0.5, rng);
    for (auto _ : state) benchmark::DoNotOptimize(oracle::mmbs_graph(g, 3));
}
BENCHMARK(BM_MmbsGraph)->DenseRange(4, 7);

void BM_ReduceVed(benchmark::State& state) {
    Rng rng(13);
    int n = static_cast<int>(state.range(0));
    CnfFormula phi = random_formula(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_cnf_ved(phi, diamond_graph()));
}
BENCHMARK(BM_ReduceVed)->RangeMultiplier(4)->Range(4, 256);

void BM_ReduceTd(benchmark::State& state) {
    Rng rng(17);
    int n = static_cast<int>(state.range(0));
    CnfFormula phi = random_formula(n, rng);
    for (auto _ : state) benchmark::DoNotOptimize(reduce_cnf_td(phi, diamond_graph()));
}
BENCHMARK(BM_ReduceTd)->RangeMultiplier(4)->Range(4, 256);

}  // namespace

BENCHMARK_MAIN();
