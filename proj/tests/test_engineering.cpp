#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "cgo/engineering.hpp"
#include "cgo/optimizer.hpp"
#include "cgo/rng.hpp"

using namespace cgo;
using namespace cgo::eng;

namespace {

const ConstrainedProblem& find(const std::vector<ConstrainedProblem>& suite,
                               const std::string& name) {
    for (const auto& p : suite)
        if (p.name == name) return p;
    REQUIRE(false);
    return suite.front();
}

} // namespace

TEST_CASE("suite matches the reference problem table") {
    const auto suite = eng::suite();
    REQUIRE(suite.size() == 7);
    // name -> (d, g, h, best_known)
    const std::map<std::string, std::tuple<std::size_t, std::size_t, std::size_t, double>> want = {
        {"spring", {3, 3, 0, 1.2665233e-2}},
        {"pressure_vessel", {4, 4, 0, 5.8853328e3}},
        {"three_bar_truss", {2, 3, 0, 2.6389584e2}},
        {"welded_beam", {4, 5, 0, 1.6702177}},
        {"speed_reducer", {7, 11, 0, 2.9944245e3}},
        {"gear_train", {4, 1, 1, 0.0}},
        {"cantilever_beam", {5, 1, 0, 1.3395842}},
    };
    for (const auto& p : suite) {
        REQUIRE(want.count(p.name) == 1);
        const auto& [d, g, h, best] = want.at(p.name);
        CHECK(p.space.dim() == d);
        CHECK(p.inequality_constraints.size() == g);
        CHECK(p.equality_constraints.size() == h);
        CHECK(p.best_known == doctest::Approx(best));
    }
}

TEST_CASE("reference optima are feasible with the expected objectives") {
    // Optima verified against a constrained NLP solver before freezing.
    const auto suite = eng::suite();
    struct Fixture {
        const char* name;
        std::vector<double> x;
        double objective;
        double tol;
    };
    const std::vector<Fixture> fixtures = {
        {"spring", {0.051689061, 0.356717747, 11.288964427}, 0.012665232788, 1e-7},
        {"pressure_vessel", {0.778168641376662, 0.3846491626286712, 40.31961872413905, 200.0},
         5885.3327736, 1e-4},
        {"three_bar_truss", {0.78867513, 0.40824828, }, 263.8958434, 1e-4},
        {"welded_beam", {0.20572964, 3.25312007, 9.03662391, 0.20572964}, 1.6952471694, 1e-6},
        {"speed_reducer", {3.5, 0.7, 17.0, 7.3, 7.71531991, 3.35021467, 5.28665446}, 2994.4710661, 1e-4},
        {"gear_train", {43.0, 16.0, 19.0, 49.0}, 2.7008571489e-12, 1e-18},
        {"cantilever_beam", {6.0160159, 5.30917384, 4.49432959, 3.50147497, 2.15266533}, 1.3399563606, 1e-6},
    };
    for (const auto& f : fixtures) {
        const auto& p = find(suite, f.name);
        const auto fit = evaluate_penalized(p, f.x);
        INFO(f.name, " violation=", fit.violation);
        CHECK(fit.violation <= 2e-6); // reference points sit on active constraints
        CHECK(std::abs(fit.objective - f.objective) <= f.tol);
    }
}

TEST_CASE("violation is the sum of constraint hinges") {
    ConstrainedProblem toy;
    toy.name = "toy";
    toy.space = SearchSpace::cube(1, -10.0, 10.0);
    toy.objective = [](std::span<const double> x) { return x[0]; };
    toy.inequality_constraints = {
        [](std::span<const double> x) { return x[0] - 1.0; },  // g1 = x - 1
        [](std::span<const double> x) { return -x[0] - 1.0; }, // g2 = -x - 1
    };
    toy.equality_constraints = {
        [](std::span<const double> x) { return x[0] - 0.5; }, // h = x - 0.5, eps 1e-4
    };

    // stress-style constraint exceeded by exactly 0.3
    const std::vector<double> x1 = {1.3};
    CHECK(violation(toy, x1) == doctest::Approx(0.3 + (1.3 - 0.5 - 1e-4)).epsilon(1e-12));
    const std::vector<double> x2 = {0.5};
    CHECK(violation(toy, x2) == 0.0);
    CHECK(evaluate_penalized(toy, x2).feasible);
    const std::vector<double> x3 = {0.50005};
    CHECK(violation(toy, x3) == 0.0); // inside the equality tolerance band
}

TEST_CASE("violation is zero exactly on the feasible set, spot-checked") {
    const auto suite = eng::suite();
    // strictly interior feasible points
    const std::map<std::string, std::vector<double>> feasible = {
        {"spring", {0.0517, 0.354, 12.0}},
        {"pressure_vessel", {1.0, 0.5, 45.0, 150.0}},
        {"three_bar_truss", {0.9, 0.5}},
        {"cantilever_beam", {7.0, 6.0, 5.0, 4.0, 3.0}},
        {"gear_train", {43.0, 16.0, 19.0, 49.0}},
    };
    for (const auto& [name, x] : feasible) {
        INFO(name);
        CHECK(violation(find(suite, name), x) == 0.0);
    }
    const std::map<std::string, std::vector<double>> infeasible = {
        {"spring", {0.05, 0.25, 2.0}},
        {"pressure_vessel", {0.1, 0.1, 200.0, 200.0}},
        {"three_bar_truss", {0.05, 0.05}},
        {"welded_beam", {0.125, 0.1, 0.1, 0.1}},
        {"speed_reducer", {2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0}},
        {"gear_train", {12.0, 60.0, 60.0, 12.0}},
        {"cantilever_beam", {0.5, 0.5, 0.5, 0.5, 0.5}},
    };
    for (const auto& [name, x] : infeasible) {
        INFO(name);
        CHECK(violation(find(suite, name), x) > 0.0);
    }
}

TEST_CASE("gear train violation is continuous in x") {
    const auto& gear = find(eng::suite(), "gear_train");
    RngStream rng(6);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> x(4), y(4);
        for (std::size_t j = 0; j < 4; ++j) {
            x[j] = rng.uniform(12.0, 60.0);
            y[j] = std::clamp(x[j] + rng.uniform(-1e-7, 1e-7), 12.0, 60.0);
        }
        CHECK(std::abs(violation(gear, x) - violation(gear, y)) < 1e-6);
    }
}

TEST_CASE("feasibility rules order candidates as specified") {
    const PenalizedFitness feas5{5.0, 0.0, true};
    const PenalizedFitness infeas1{1.0, 0.2, false};
    CHECK(feasibility_compare(feas5, infeas1) == std::weak_ordering::less);

    const PenalizedFitness feas2{2.0, 0.0, true};
    const PenalizedFitness feas3{3.0, 0.0, true};
    CHECK(feasibility_compare(feas2, feas3) == std::weak_ordering::less);

    const PenalizedFitness inf_small{9.0, 0.1, false};
    const PenalizedFitness inf_large{1.0, 0.5, false};
    CHECK(feasibility_compare(inf_small, inf_large) == std::weak_ordering::less);

    CHECK(feasibility_compare(feas2, feas2) == std::weak_ordering::equivalent);
}

TEST_CASE("scalar bridge induces exactly the feasibility-rule order") {
    RngStream rng(12);
    for (int trial = 0; trial < 2000; ++trial) {
        PenalizedFitness a, b;
        a.feasible = rng.uniform01() < 0.5;
        b.feasible = rng.uniform01() < 0.5;
        a.objective = rng.uniform(-1e6, 1e6);
        b.objective = rng.uniform(-1e6, 1e6);
        a.violation = a.feasible ? 0.0 : rng.uniform(1e-9, 1e6);
        b.violation = b.feasible ? 0.0 : rng.uniform(1e-9, 1e6);
        const auto order = feasibility_compare(a, b);
        const double sa = penalized_scalar(a);
        const double sb = penalized_scalar(b);
        if (order == std::weak_ordering::less) CHECK(sa < sb);
        else if (order == std::weak_ordering::greater) CHECK(sa > sb);
    }
}

TEST_CASE("bridged problems keep the best incumbent feasible once found") {
    const auto suite = eng::suite();
    for (const auto& cp : suite) {
        CgoParams params;
        params.population_size = 20;
        params.max_iterations = 40;
        params.seed = 91;
        const Problem bridged = as_problem(cp);
        const RunRecord record = run(bridged.space(), params, bridged);
        bool was_feasible = false;
        for (double v : record.best_trace) {
            const bool feasible_now = v < kInfeasibleBase;
            if (was_feasible) CHECK(feasible_now);
            was_feasible = was_feasible || feasible_now;
        }
    }
}
