#include <iostream>

#include <CLI11.hpp>

#include "cgo/experiments.hpp"
#include "cgo/format.hpp"

namespace {

// Exit codes: 0 success, 2 usage error, 3 ingestion error, 4 I/O error.
constexpr int kUsageExit = 2;
constexpr int kIngestionExit = 3;
constexpr int kIoExit = 4;

struct Cli {
    cgo::experiments::ExperimentConfig config;
    bool iterations_given = false;
    bool runs_given = false;
};

void add_common_flags(CLI::App* cmd, Cli& cli) {
    cmd->add_option("--problem", cli.config.problems, "Problem name(s); default: whole suite");
    cmd->add_option("--algo", cli.config.algorithms, "Algorithms to run: cgo, pso, random");
    cmd->add_option("--runs", cli.config.runs, "Independent runs per cell")
        ->check(CLI::PositiveNumber)
        ->each([&cli](const std::string&) { cli.runs_given = true; });
    cmd->add_option("--pop", cli.config.population, "Population / swarm size")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--iters", cli.config.iterations, "Iterations per run")
        ->check(CLI::NonNegativeNumber)
        ->each([&cli](const std::string&) { cli.iterations_given = true; });
    cmd->add_option("--seed", cli.config.base_seed, "Base seed; run r uses base + r");
    cmd->add_option("--out", cli.config.out_dir, "Output directory");
    cmd->add_flag("--emit-traces", cli.config.emit_traces, "Write per-run convergence traces");
}

void print_summary(const cgo::stats::ComparisonTable& table) {
    for (const auto& row : table.rows) {
        std::cout << row.problem << " / " << row.algorithm
                  << ": best=" << cgo::format_double(row.stats.best)
                  << " mean=" << cgo::format_double(row.stats.mean)
                  << " std=" << cgo::format_double(row.stats.stddev);
        if (row.infeasible_runs > 0) std::cout << " infeasible_runs=" << row.infeasible_runs;
        std::cout << "\n";
    }
    for (const auto& p : table.p_values)
        std::cout << "p[" << p.problem << ", cgo vs " << p.algorithm
                  << "] = " << cgo::format_double(p.p) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Competitive Game Optimizer experiment driver"};
    app.require_subcommand(1);

    Cli cli;
    CLI::App* bench = app.add_subcommand("bench", "Benchmark suite comparison sweep");
    add_common_flags(bench, cli);
    std::size_t dim = 10;
    bench->add_option("--dim", dim, "Benchmark dimension")->check(CLI::Range(2, 10000));

    CLI::App* engineering =
        app.add_subcommand("engineering", "Constrained design problem sweep");
    add_common_flags(engineering, cli);

    CLI::App* uav = app.add_subcommand("uav", "Path planning on a scenario");
    add_common_flags(uav, cli);
    uav->add_option("--scenario", cli.config.scenario,
                    "Built-in scenario ('one', 'two') or a scenario file path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageExit;
    }

    try {
        if (bench->parsed()) {
            cli.config.dim = dim;
            if (!cli.runs_given) cli.config.runs = 30;
            if (!cli.iterations_given) cli.config.iterations = 1000;
            print_summary(cgo::experiments::cmd_bench(cli.config));
        } else if (engineering->parsed()) {
            if (!cli.runs_given) cli.config.runs = 30;
            if (!cli.iterations_given) cli.config.iterations = 50;
            print_summary(cgo::experiments::cmd_engineering(cli.config));
        } else if (uav->parsed()) {
            if (!cli.runs_given) cli.config.runs = 20;
            if (!cli.iterations_given) cli.config.iterations = 300;
            const auto outcome = cgo::experiments::cmd_uav(cli.config);
            std::cout << "scenario " << outcome.scenario.name << ": best total="
                      << cgo::format_double(outcome.total)
                      << " (length=" << cgo::format_double(outcome.length)
                      << ", obstacle=" << cgo::format_double(outcome.obstacle)
                      << ", height=" << cgo::format_double(outcome.height) << ")\n";
            print_summary(outcome.summary);
        }
    } catch (const cgo::UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsageExit;
    } catch (const cgo::IngestionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIngestionExit;
    } catch (const cgo::IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoExit;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
