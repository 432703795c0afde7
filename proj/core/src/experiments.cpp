#include "cgo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include <json.hpp>

#include "cgo/baselines.hpp"
#include "cgo/benchmarks.hpp"
#include "cgo/engineering.hpp"
#include "cgo/format.hpp"
#include "cgo/optimizer.hpp"

namespace cgo::experiments {

namespace fs = std::filesystem;

namespace {

std::vector<std::string> resolve_algorithms(const ExperimentConfig& config) {
    if (config.algorithms.empty()) return kAlgorithms;
    for (const std::string& a : config.algorithms) {
        if (std::find(kAlgorithms.begin(), kAlgorithms.end(), a) == kAlgorithms.end()) {
            std::string valid;
            for (const std::string& k : kAlgorithms) valid += (valid.empty() ? "" : ", ") + k;
            throw UsageError("unknown algorithm '" + a + "' (valid: " + valid + ")");
        }
    }
    return config.algorithms;
}

std::ofstream open_out(const fs::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    return out;
}

fs::path prepare_out_dir(const ExperimentConfig& config) {
    if (config.out_dir.empty()) return {};
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) throw IoError("cannot create output directory '" + config.out_dir.string() + "': " +
                          ec.message());
    return config.out_dir;
}

void write_trace(const fs::path& dir, const std::string& problem, const std::string& algo,
                 int run, const RunRecord& record) {
    auto out = open_out(dir / ("trace_" + problem + "_" + algo + "_run" + std::to_string(run) +
                               ".csv"));
    out << "iteration,best\n";
    for (std::size_t t = 0; t < record.best_trace.size(); ++t)
        out << t << ',' << format_double(record.best_trace[t]) << "\n";
}

} // namespace

std::map<std::string, RunRecord> run_matched(const Problem& problem,
                                             const std::vector<std::string>& algos,
                                             const ExperimentConfig& config, std::uint64_t seed) {
    std::map<std::string, RunRecord> records;
    std::uint64_t budget = 0;
    for (const std::string& algo : algos) {
        if (algo == "cgo") {
            CgoParams params;
            params.population_size = config.population;
            params.max_iterations = config.iterations;
            params.seed = seed;
            records["cgo"] = run(problem.space(), params, problem);
            budget = std::max(budget, records["cgo"].evaluations);
        }
    }
    if (budget == 0)
        budget = static_cast<std::uint64_t>(config.population) *
                 static_cast<std::uint64_t>(config.iterations + 1);
    for (const std::string& algo : algos) {
        if (algo == "pso") {
            baselines::PsoParams params;
            params.swarm_size = config.population;
            params.max_iterations = std::max(
                1, static_cast<int>(std::llround(static_cast<double>(budget) /
                                                 config.population)) - 1);
            params.seed = seed;
            records["pso"] = baselines::pso_run(problem.space(), params, problem);
        } else if (algo == "random") {
            records["random"] = baselines::random_search_run(problem.space(), budget, seed, problem);
        }
    }
    return records;
}

namespace {

void attach_pvalues(stats::ComparisonTable& table, const std::string& reference,
                    const std::map<std::string, std::map<std::string, std::vector<double>>>& finals,
                    const std::vector<std::string>& problem_order) {
    for (const std::string& prob : problem_order) {
        const auto pit = finals.find(prob);
        if (pit == finals.end()) continue;
        const auto ref = pit->second.find(reference);
        if (ref == pit->second.end() || ref->second.size() < 3) continue;
        for (const auto& [algo, values] : pit->second) {
            if (algo == reference || values.size() < 3) continue;
            table.p_values.push_back({prob, algo, stats::wilcoxon_ranksum(ref->second, values)});
        }
    }
}

void write_table(const stats::ComparisonTable& table, const fs::path& dir) {
    if (dir.empty()) return;
    {
        auto out = open_out(dir / "summary.csv");
        table.write_csv(out);
    }
    {
        auto out = open_out(dir / "summary.json");
        out << table.to_json() << "\n";
    }
    {
        auto out = open_out(dir / "pvalues.csv");
        table.write_pvalues_csv(out);
    }
}

} // namespace

stats::ComparisonTable cmd_bench(const ExperimentConfig& config) {
    const std::vector<std::string> algos = resolve_algorithms(config);
    std::vector<bench::BenchmarkProblem> suite = bench::standard_suite(config.dim);
    if (!config.problems.empty()) {
        std::vector<bench::BenchmarkProblem> filtered;
        for (const std::string& want : config.problems) {
            const auto it = std::find_if(suite.begin(), suite.end(),
                                         [&](const auto& p) { return p.name == want; });
            if (it == suite.end()) {
                std::string valid;
                for (const auto& p : suite) valid += (valid.empty() ? "" : ", ") + p.name;
                throw UsageError("unknown problem '" + want + "' (valid: " + valid + ")");
            }
            filtered.push_back(*it);
        }
        suite = std::move(filtered);
    }
    const fs::path dir = prepare_out_dir(config);

    stats::ComparisonTable table;
    table.algorithms = algos;
    std::map<std::string, std::map<std::string, std::vector<double>>> finals;
    std::vector<std::string> problem_order;
    for (const bench::BenchmarkProblem& bp : suite) {
        problem_order.push_back(bp.name);
        const Problem problem = bp.as_problem();
        for (int r = 0; r < config.runs; ++r) {
            const auto records = run_matched(problem, algos, config, config.base_seed + r);
            for (const auto& [algo, record] : records) {
                finals[bp.name][algo].push_back(record.final_best.fitness);
                if (config.emit_traces && !dir.empty()) write_trace(dir, bp.name, algo, r, record);
            }
        }
        for (const std::string& algo : algos)
            table.rows.push_back({bp.name, algo, stats::summarize(finals[bp.name][algo]), 0});
    }
    const std::string reference =
        std::find(algos.begin(), algos.end(), "cgo") != algos.end() ? "cgo" : algos.front();
    attach_pvalues(table, reference, finals, problem_order);
    write_table(table, dir);
    return table;
}

stats::ComparisonTable cmd_engineering(const ExperimentConfig& config) {
    const std::vector<std::string> algos = resolve_algorithms(config);
    std::vector<eng::ConstrainedProblem> suite = eng::suite();
    if (!config.problems.empty()) {
        std::vector<eng::ConstrainedProblem> filtered;
        for (const std::string& want : config.problems) {
            const auto it = std::find_if(suite.begin(), suite.end(),
                                         [&](const auto& p) { return p.name == want; });
            if (it == suite.end()) {
                std::string valid;
                for (const auto& p : suite) valid += (valid.empty() ? "" : ", ") + p.name;
                throw UsageError("unknown problem '" + want + "' (valid: " + valid + ")");
            }
            filtered.push_back(*it);
        }
        suite = std::move(filtered);
    }
    const fs::path dir = prepare_out_dir(config);

    stats::ComparisonTable table;
    table.algorithms = algos;
    std::map<std::string, std::map<std::string, std::vector<double>>> feasible_finals;
    std::vector<std::string> problem_order;
    for (const eng::ConstrainedProblem& cp : suite) {
        problem_order.push_back(cp.name);
        const Problem problem = eng::as_problem(cp);
        std::map<std::string, std::uint64_t> infeasible;
        for (int r = 0; r < config.runs; ++r) {
            const auto records = run_matched(problem, algos, config, config.base_seed + r);
            for (const auto& [algo, record] : records) {
                const auto fit = eng::evaluate_penalized(cp, record.final_best.position);
                if (fit.feasible) {
                    feasible_finals[cp.name][algo].push_back(fit.objective);
                    if (config.emit_traces && !dir.empty())
                        write_trace(dir, cp.name, algo, r, record);
                } else {
                    ++infeasible[algo];
                }
            }
        }
        for (const std::string& algo : algos) {
            const auto& vals = feasible_finals[cp.name][algo];
            stats::SummaryStats s;
            if (vals.empty()) {
                s.best = s.mean = std::numeric_limits<double>::infinity();
                s.stddev = 0.0;
            } else {
                s = stats::summarize(vals);
            }
            table.rows.push_back({cp.name, algo, s, infeasible[algo]});
        }
    }
    const std::string reference =
        std::find(algos.begin(), algos.end(), "cgo") != algos.end() ? "cgo" : algos.front();
    attach_pvalues(table, reference, feasible_finals, problem_order);
    write_table(table, dir);
    return table;
}

UavOutcome cmd_uav(const ExperimentConfig& config) {
    const std::vector<std::string> algos = resolve_algorithms(config);

    UavOutcome outcome;
    if (config.scenario == "one" || config.scenario == "two") {
        auto [one, two] = uav::build_scenarios();
        outcome.scenario = config.scenario == "one" ? std::move(one) : std::move(two);
    } else {
        outcome.scenario = uav::load_scenario(config.scenario);
    }
    const Problem problem = uav::make_problem(outcome.scenario);
    const fs::path dir = prepare_out_dir(config);

    stats::ComparisonTable table;
    table.algorithms = algos;
    std::map<std::string, std::map<std::string, std::vector<double>>> finals;
    double best_total = std::numeric_limits<double>::infinity();
    std::vector<double> best_x;
    for (int r = 0; r < config.runs; ++r) {
        const auto records = run_matched(problem, algos, config, config.base_seed + r);
        for (const auto& [algo, record] : records) {
            finals[outcome.scenario.name][algo].push_back(record.final_best.fitness);
            if (record.final_best.fitness < best_total) {
                best_total = record.final_best.fitness;
                best_x = record.final_best.position;
            }
            if (config.emit_traces && !dir.empty())
                write_trace(dir, "uav_" + outcome.scenario.name, algo, r, record);
        }
    }
    for (const std::string& algo : algos)
        table.rows.push_back({outcome.scenario.name, algo,
                              stats::summarize(finals[outcome.scenario.name][algo]), 0});
    const std::string reference =
        std::find(algos.begin(), algos.end(), "cgo") != algos.end() ? "cgo" : algos.front();
    attach_pvalues(table, reference, finals, {outcome.scenario.name});

    outcome.best_path = uav::decode(best_x, outcome.scenario);
    outcome.length = uav::length_cost(outcome.best_path);
    outcome.obstacle = uav::obstacle_cost(outcome.best_path, outcome.scenario);
    outcome.height = uav::height_cost(outcome.best_path, outcome.scenario);
    outcome.total = best_total;
    outcome.summary = std::move(table);

    if (!dir.empty()) {
        {
            auto out = open_out(dir / "path.csv");
            uav::write_path_csv(outcome.best_path, out);
        }
        {
            auto out = open_out(dir / "path.svg");
            uav::write_svg(outcome.best_path, outcome.scenario, out);
        }
        {
            auto out = open_out(dir / "costs.json");
            nlohmann::json j;
            j["length"] = outcome.length;
            j["obstacle"] = outcome.obstacle;
            j["height"] = outcome.height;
            j["total"] = outcome.total;
            j["weights"] = outcome.scenario.weights;
            out << j.dump(2) << "\n";
        }
        {
            auto out = open_out(dir / "scenario.txt");
            uav::save_scenario(outcome.scenario, out);
        }
        write_table(outcome.summary, dir);
    }
    return outcome;
}

} // namespace cgo::experiments
