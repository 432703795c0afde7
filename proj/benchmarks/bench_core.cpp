#include <benchmark/benchmark.h>

#include "cgo/benchmarks.hpp"
#include "cgo/optimizer.hpp"

namespace {

void BM_LevyStep(benchmark::State& state) {
    cgo::RngStream rng(1);
    for (auto _ : state) benchmark::DoNotOptimize(cgo::levy_step(1.5, rng));
}
BENCHMARK(BM_LevyStep);

void BM_SphereEvaluate(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const std::vector<double> x(dim, 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(cgo::bench::sphere(x));
}
BENCHMARK(BM_SphereEvaluate)->Arg(10)->Arg(30)->Arg(100);

void BM_RastriginEvaluate(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const std::vector<double> x(dim, 1.5);
    for (auto _ : state) benchmark::DoNotOptimize(cgo::bench::rastrigin(x));
}
BENCHMARK(BM_RastriginEvaluate)->Arg(10)->Arg(30);

void BM_CgoIteration(benchmark::State& state) {
    const auto dim = static_cast<std::size_t>(state.range(0));
    const cgo::Problem problem("sphere", cgo::SearchSpace::cube(dim, -100.0, 100.0),
                               [](std::span<const double> x) {
                                   double s = 0.0;
                                   for (double v : x) s += v * v;
                                   return s;
                               });
    cgo::CgoParams params;
    params.population_size = 50;
    params.seed = 3;
    cgo::RngStream rng(params.seed);
    cgo::Population pop = cgo::initialize(problem.space(), params, problem, rng);
    int t = 0;
    for (auto _ : state) {
        const double e = cgo::encounter_probability(t % 1000, 1000);
        cgo::safe_zone_step(pop, params, problem, rng);
        cgo::search_step(pop, params, problem, rng);
        cgo::battle_step(pop, params, problem, rng, e);
        ++t;
    }
    state.SetItemsProcessed(state.iterations() * params.population_size);
}
BENCHMARK(BM_CgoIteration)->Arg(10)->Arg(30);

} // namespace

BENCHMARK_MAIN();
