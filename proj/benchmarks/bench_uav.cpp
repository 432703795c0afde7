#include <benchmark/benchmark.h>

#include "cgo/rng.hpp"
#include "cgo/uav.hpp"

namespace {

void BM_SegmentDistance(benchmark::State& state) {
    cgo::RngStream rng(2);
    double a = rng.uniform(-100, 100), b = rng.uniform(-100, 100);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            cgo::uav::segment_point_distance(a, b, -a, -b, a * 0.5, b * 0.25));
}
BENCHMARK(BM_SegmentDistance);

void BM_TotalCost(benchmark::State& state) {
    const auto [one, two] = cgo::uav::build_scenarios();
    (void)two;
    cgo::RngStream rng(4);
    const cgo::Problem problem = cgo::uav::make_problem(one);
    std::vector<double> x(problem.dim());
    for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = problem.space().lower[j] +
               rng.uniform01() * (problem.space().upper[j] - problem.space().lower[j]);
    for (auto _ : state) benchmark::DoNotOptimize(cgo::uav::total_cost(x, one));
    state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_TotalCost);

} // namespace

BENCHMARK_MAIN();
