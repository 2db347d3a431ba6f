#include <benchmark/benchmark.h>

#include "hurwitz/expansion.hpp"
#include "hurwitz/lattice_tail.hpp"
#include "hurwitz/pressure.hpp"
#include "hurwitz/verify.hpp"

using namespace hurwitz;

static void BM_Expand(benchmark::State& state) {
    std::uint64_t seed = 1;
    std::vector<GaussianRational> points;
    for (int i = 0; i < 64; ++i) points.push_back(random_unit_box_rational(seed, state.range(0)));
    std::size_t i = 0;
    for (auto _ : state) benchmark::DoNotOptimize(expand(points[i++ % points.size()]));
}
BENCHMARK(BM_Expand)->Arg(100)->Arg(10000)->Arg(1000000);

static void BM_PartitionSum(benchmark::State& state) {
    const std::vector<GaussianInt> alphabet{{2, 2}, {-2, -2}, {3, 0}, {0, 3}};
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(partition_sum(alphabet, n, 1.0, NormMode::sup_norm));
    state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << (2 * n)));
}
BENCHMARK(BM_PartitionSum)->DenseRange(4, 10, 3)->Unit(benchmark::kMillisecond);

static void BM_LatticeTail(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(lattice_tail_sum(state.range(0), 2.5));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LatticeTail)->RangeMultiplier(10)->Range(1000, 10000000)->Unit(benchmark::kMillisecond)->Complexity(benchmark::oN);

BENCHMARK_MAIN();
