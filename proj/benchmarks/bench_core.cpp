#include <benchmark/benchmark.h>

#include "gperm/eulerian.hpp"
#include "gperm/genperm.hpp"
#include "gperm/minkowski.hpp"
#include "gperm/permutohedron.hpp"
#include "gperm/rootpoly.hpp"
#include "gperm/tableaux.hpp"

using namespace gperm;

static RationalVector staircase(int n) {
    RationalVector x;
    for (int i = n - 1; i >= 0; --i) x.emplace_back(i * i + 1);
    return x;
}

static void BM_SymmetrizationVolume(benchmark::State& state) {
    auto x = staircase(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(volume_numeric_symmetrization(x));
}
BENCHMARK(BM_SymmetrizationVolume)->DenseRange(3, 8)->Unit(benchmark::kMillisecond);

static void BM_VolumePolynomial(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(volume_symbolic(n));
}
BENCHMARK(BM_VolumePolynomial)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_DraconianVolume(benchmark::State& state) {
    auto f = SubsetFamily::intervals(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(volume(f));
}
BENCHMARK(BM_DraconianVolume)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_VertexSumVolume(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    auto y = weights_by_subset(SubsetFamily::intervals(n));
    for (auto _ : state) benchmark::DoNotOptimize(volume_vertex_sum(y, n));
}
BENCHMARK(BM_VertexSumVolume)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_RaisingPowerLattice(benchmark::State& state) {
    auto f = SubsetFamily::uniform(static_cast<int>(state.range(0)), 2);
    for (auto _ : state) benchmark::DoNotOptimize(lattice_points(f, false));
}
BENCHMARK(BM_RaisingPowerLattice)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_DragonByVolume(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(dragon_families_by_volume(n));
}
BENCHMARK(BM_DragonByVolume)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

static void BM_Triangulate(benchmark::State& state) {
    auto g = BipartiteGraph::complete(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
    for (auto _ : state) benchmark::DoNotOptimize(triangulate(g));
}
BENCHMARK(BM_Triangulate)->Args({2, 3})->Args({3, 3})->Args({3, 4})->Args({4, 4})->Unit(benchmark::kMillisecond);

static void BM_MixedEulerian(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    Composition c(n, 0);
    c[0] = n;
    for (auto _ : state) benchmark::DoNotOptimize(mixed_eulerian(c));
}
BENCHMARK(BM_MixedEulerian)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

static void BM_NestedSets(benchmark::State& state) {
    auto b = BuildingSet::intervals(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(nested_sets(b));
}
BENCHMARK(BM_NestedSets)->DenseRange(3, 7);

static void BM_CatalanCount(benchmark::State& state) {
    auto b = BuildingSet::cyclic(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(generalized_catalan(b));
}
BENCHMARK(BM_CatalanCount)->DenseRange(3, 8);

static void BM_DiagonalVectors(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(count_diagonal_vectors(n));
}
BENCHMARK(BM_DiagonalVectors)->DenseRange(4, 8)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
