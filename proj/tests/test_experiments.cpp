#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cgo/experiments.hpp"
#include "cgo/uav.hpp"

using namespace cgo;
using namespace cgo::experiments;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ExperimentConfig tiny_bench_config() {
    ExperimentConfig config;
    config.problems = {"sphere", "rastrigin"};
    config.runs = 3;
    config.population = 10;
    config.iterations = 20;
    config.base_seed = 100;
    config.dim = 3;
    return config;
}

} // namespace

TEST_CASE("run_matched grants every algorithm the same budget within 1%") {
    const ExperimentConfig config = tiny_bench_config();
    const Problem problem("sphere", SearchSpace::cube(4, -10.0, 10.0),
                          [](std::span<const double> x) {
                              double s = 0;
                              for (double v : x) s += v * v;
                              return s;
                          });
    const auto records = run_matched(problem, kAlgorithms, config, 7);
    REQUIRE(records.count("cgo") == 1);
    REQUIRE(records.count("pso") == 1);
    REQUIRE(records.count("random") == 1);
    const double budget = static_cast<double>(records.at("cgo").evaluations);
    for (const auto& [name, record] : records) {
        INFO(name);
        CHECK(std::abs(static_cast<double>(record.evaluations) - budget) / budget < 0.01);
    }
}

TEST_CASE("cmd_bench aggregates cells and is deterministic") {
    const ExperimentConfig config = tiny_bench_config();
    const auto table = cmd_bench(config);
    CHECK(table.algorithms == kAlgorithms);
    CHECK(table.rows.size() == 2 * 3); // problems x algorithms
    // p-values: cgo vs pso and cgo vs random per problem
    CHECK(table.p_values.size() == 4);
    for (const auto& p : table.p_values) {
        CHECK(p.p > 0.0);
        CHECK(p.p <= 1.0);
    }

    const auto again = cmd_bench(config);
    CHECK(again.to_json() == table.to_json());
}

TEST_CASE("cmd_bench writes byte-identical outputs for a fixed seed") {
    ExperimentConfig config = tiny_bench_config();
    const auto base = std::filesystem::temp_directory_path() / "cgo_bench_out";
    std::filesystem::remove_all(base);
    config.out_dir = base / "a";
    config.emit_traces = true;
    cmd_bench(config);
    config.out_dir = base / "b";
    cmd_bench(config);

    int compared = 0;
    for (const auto& entry : std::filesystem::directory_iterator(base / "a")) {
        const auto name = entry.path().filename();
        INFO(name.string());
        CHECK(slurp(entry.path()) == slurp(base / "b" / name));
        ++compared;
    }
    CHECK(compared >= 3 + 2 * 3 * 3); // summaries + traces per cell
}

TEST_CASE("unknown selectors raise usage errors naming the options") {
    ExperimentConfig config = tiny_bench_config();
    config.problems = {"nosuch"};
    CHECK_THROWS_WITH_AS(cmd_bench(config), doctest::Contains("sphere"), UsageError);
    config.problems = {"sphere"};
    config.algorithms = {"annealing"};
    CHECK_THROWS_WITH_AS(cmd_bench(config), doctest::Contains("cgo"), UsageError);
}

TEST_CASE("cmd_engineering reports feasible bests and infeasible counts") {
    ExperimentConfig config;
    config.problems = {"three_bar_truss"};
    config.algorithms = {"cgo"};
    config.runs = 3;
    config.population = 20;
    config.iterations = 40;
    config.base_seed = 5;
    const auto table = cmd_engineering(config);
    REQUIRE(table.rows.size() == 1);
    const auto& row = table.rows.front();
    CHECK(row.problem == "three_bar_truss");
    // all runs should end feasible on this small problem
    CHECK(row.infeasible_runs == 0);
    CHECK(row.stats.best >= 263.89584 - 1e-9);
    CHECK(row.stats.best < 400.0);
}

TEST_CASE("cmd_uav emits path artifacts that are byte-stable") {
    ExperimentConfig config;
    config.algorithms = {"cgo"};
    config.runs = 2;
    config.population = 15;
    config.iterations = 40;
    config.base_seed = 9;
    config.scenario = "two";

    const auto base = std::filesystem::temp_directory_path() / "cgo_uav_out";
    std::filesystem::remove_all(base);
    config.out_dir = base / "a";
    const auto outcome = cmd_uav(config);
    CHECK(outcome.scenario.obstacles.size() == 4);
    CHECK(outcome.best_path.points.size() == 50);
    CHECK(outcome.total ==
          doctest::Approx(0.5 * outcome.length + 0.3 * outcome.obstacle + 0.2 * outcome.height));

    for (const char* name : {"path.csv", "path.svg", "costs.json", "scenario.txt", "summary.csv",
                             "summary.json", "pvalues.csv"}) {
        INFO(name);
        CHECK(std::filesystem::exists(base / "a" / name));
    }

    config.out_dir = base / "b";
    cmd_uav(config);
    for (const char* name : {"path.csv", "path.svg", "costs.json", "summary.json"}) {
        INFO(name);
        CHECK(slurp(base / "a" / name) == slurp(base / "b" / name));
    }
}

TEST_CASE("uav scenario files load through cmd_uav") {
    const auto [one, _] = uav::build_scenarios();
    const auto path = std::filesystem::temp_directory_path() / "cmd_uav_scenario.txt";
    {
        std::ofstream out(path);
        uav::save_scenario(one, out);
    }
    ExperimentConfig config;
    config.algorithms = {"random"};
    config.runs = 1;
    config.population = 10;
    config.iterations = 5;
    config.scenario = path.string();
    const auto outcome = cmd_uav(config);
    CHECK(outcome.scenario.obstacles.size() == 7);

    config.scenario = "/nonexistent/scenario.txt";
    CHECK_THROWS_AS(cmd_uav(config), IngestionError);
}
