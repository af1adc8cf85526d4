#include <benchmark/benchmark.h>

#include "dwedge/intersect.hpp"
#include "dwedge/random_instances.hpp"

using namespace dwedge;

namespace {

std::vector<DoubleWedge> instance(int n, int hourglass_percent, std::uint64_t seed) {
    RandomWedgeConfig cfg;
    cfg.n = n;
    cfg.hourglass_percent = hourglass_percent;
    cfg.coord_range = 1000;
    cfg.seed = seed;
    return random_wedges(cfg);
}

void BM_UncoveredSlope(benchmark::State& state) {
    auto wedges = instance(int(state.range(0)), 50, 11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(find_uncovered_slope(wedges).verdict);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_UncoveredSlope)->RangeMultiplier(2)->Range(1 << 10, 1 << 16)->Complexity(benchmark::oNLogN);

void BM_IntersectBowties(benchmark::State& state) {
    auto wedges = instance(int(state.range(0)), 0, 23);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersect_bowties(wedges).component_count);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IntersectBowties)->RangeMultiplier(2)->Range(1 << 8, 1 << 13)->Complexity(benchmark::oNLogN)->Unit(benchmark::kMillisecond);

void BM_IntersectGeneral(benchmark::State& state) {
    auto wedges = instance(int(state.range(0)), 50, 37);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersect_general(wedges).component_count);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IntersectGeneral)->RangeMultiplier(2)->Range(1 << 4, 1 << 8)->Complexity(benchmark::oNSquared)->Unit(benchmark::kMillisecond);

void BM_IntersectParameterized(benchmark::State& state) {
    auto wedges = instance(int(state.range(0)), 0, 41);
    auto hours = instance(4, 100, 43);
    for (auto& h : hours) wedges.push_back(h);
    for (auto _ : state) {
        benchmark::DoNotOptimize(intersect_parameterized(wedges).component_count);
    }
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_IntersectParameterized)->RangeMultiplier(2)->Range(1 << 4, 1 << 8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
