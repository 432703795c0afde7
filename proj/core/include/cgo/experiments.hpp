#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cgo/optimizer.hpp"
#include "cgo/stats.hpp"
#include "cgo/uav.hpp"

namespace cgo::experiments {

/// Shared settings of the experiment subcommands. Per-run seeds derive as
/// base_seed + run index, so a run set is reproducible from one number.
struct ExperimentConfig {
    std::vector<std::string> problems;   // empty = every problem of the suite
    std::vector<std::string> algorithms; // subset of {"cgo", "pso", "random"}
    int runs = 30;
    int population = 50;
    int iterations = 1000;
    std::uint64_t base_seed = 1;
    std::size_t dim = 10; // benchmark suite dimension
    std::filesystem::path out_dir;
    bool emit_traces = false;
    std::string scenario = "one"; // uav: builtin name or file path
};

inline const std::vector<std::string> kAlgorithms = {"cgo", "pso", "random"};

/// One (problem x seed) cell over the selected algorithms at a matched
/// evaluation budget: cgo runs first and its evaluation count becomes the
/// budget for the others (pso rounds to whole swarm sweeps, random search
/// matches it exactly).
std::map<std::string, RunRecord> run_matched(const Problem& problem,
                                             const std::vector<std::string>& algorithms,
                                             const ExperimentConfig& config, std::uint64_t seed);

/// Benchmark sweep: every (algorithm x problem x seed) cell at a matched
/// evaluation budget. Writes summary.csv/.json and pvalues.csv (plus
/// per-cell traces when requested) into out_dir if it is non-empty.
stats::ComparisonTable cmd_bench(const ExperimentConfig& config);

/// Constrained suite sweep reporting the feasible best per run; runs that
/// never reach feasibility are counted separately.
stats::ComparisonTable cmd_engineering(const ExperimentConfig& config);

struct UavOutcome {
    uav::Scenario scenario;
    uav::Path best_path;
    double length = 0.0;
    double obstacle = 0.0;
    double height = 0.0;
    double total = 0.0;
    stats::ComparisonTable summary; // per-algorithm totals over the run set
};

/// Path-planning runs on one scenario; writes the best path (CSV + SVG), the
/// cost breakdown, the run summary, and a copy of the scenario file.
UavOutcome cmd_uav(const ExperimentConfig& config);

} // namespace cgo::experiments
