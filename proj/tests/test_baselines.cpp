#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <mutex>
#include <vector>

#include "cgo/baselines.hpp"

using namespace cgo;
using namespace cgo::baselines;

namespace {

Problem sphere_problem(std::size_t dim) {
    return Problem("sphere", SearchSpace::cube(dim, -100.0, 100.0),
                   [](std::span<const double> x) {
                       double s = 0.0;
                       for (double v : x) s += v * v;
                       return s;
                   });
}

} // namespace

TEST_CASE("pso traces are non-increasing and deterministic") {
    PsoParams params;
    params.swarm_size = 20;
    params.max_iterations = 100;
    params.seed = 41;
    const Problem problem = sphere_problem(10);
    const RunRecord a = pso_run(problem.space(), params, problem);
    REQUIRE(a.best_trace.size() == 100);
    for (std::size_t t = 1; t < a.best_trace.size(); ++t)
        CHECK(a.best_trace[t] <= a.best_trace[t - 1]);
    CHECK(a.evaluations == 20u * 101u);

    const RunRecord b = pso_run(problem.space(), params, problem);
    CHECK(a.best_trace == b.best_trace);
    CHECK(a.final_best.position == b.final_best.position);
}

TEST_CASE("pso velocity clamp bounds per-iteration displacement") {
    PsoParams params;
    params.swarm_size = 5;
    params.max_iterations = 40;
    params.velocity_clamp = 0.01; // 1% of the 200-wide box = 2.0 per step
    params.seed = 4;

    // record every evaluated position, in call order
    std::vector<std::vector<double>> visits;
    const SearchSpace space = SearchSpace::cube(3, -100.0, 100.0);
    const Problem problem("tracked", space, [&](std::span<const double> x) {
        visits.emplace_back(x.begin(), x.end());
        double s = 0.0;
        for (double v : x) s += v * v;
        return s;
    });
    pso_run(space, params, problem);

    // particle i is evaluated at indices i, i+N, i+2N, ...; consecutive
    // positions of one particle can differ by at most the velocity clamp
    const std::size_t n = 5;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = i + n; t < visits.size(); t += n) {
            for (std::size_t j = 0; j < 3; ++j) {
                CHECK(std::abs(visits[t][j] - visits[t - n][j]) <= 2.0 + 1e-12);
            }
        }
    }

    params.velocity_clamp = 0.0;
    CHECK_THROWS_AS(params.validate(), ConfigError);
    params.velocity_clamp = 1.5;
    CHECK_THROWS_AS(params.validate(), ConfigError);
}

TEST_CASE("pso respects bounds") {
    PsoParams params;
    params.swarm_size = 10;
    params.max_iterations = 50;
    params.seed = 9;
    const SearchSpace space = SearchSpace::cube(4, -2.0, 3.0);
    const Problem problem("bounded", space, [&](std::span<const double> x) {
        for (double v : x) {
            CHECK(v >= -2.0);
            CHECK(v <= 3.0);
        }
        return x[0];
    });
    pso_run(space, params, problem);
}

TEST_CASE("random search budget and running minimum") {
    const Problem problem = sphere_problem(6);
    const RunRecord one = random_search_run(problem.space(), 1, 11, problem);
    CHECK(one.best_trace.size() == 1);
    CHECK(one.evaluations == 1);

    const RunRecord many = random_search_run(problem.space(), 5000, 11, problem);
    CHECK(many.evaluations == 5000);
    for (std::size_t t = 1; t < many.best_trace.size(); ++t)
        CHECK(many.best_trace[t] <= many.best_trace[t - 1]);

    const RunRecord again = random_search_run(problem.space(), 5000, 11, problem);
    CHECK(again.best_trace == many.best_trace);

    CHECK_THROWS_AS(random_search_run(problem.space(), 0, 1, problem), ConfigError);
}
