#include "cgo/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace cgo {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sanitize(double value) { return std::isnan(value) ? kInf : value; }

double evaluate_clamped(const Problem& problem, const SearchSpace& space,
                        std::vector<double>& candidate) {
    space.clamp(candidate);
    return sanitize(problem.evaluate(candidate));
}

// Refresh the detached best copy from the members. Keeps the historical
// incumbent if every member is worse.
void sync_best(Population& pop) {
    const Individual* best = nullptr;
    for (const Individual& m : pop.members)
        if (best == nullptr || m.fitness < best->fitness) best = &m;
    if (best != nullptr && best->fitness < pop.best.fitness) pop.best = *best;
}

int safe_zone_count(const CgoParams& params) {
    const int n = params.population_size;
    return static_cast<int>(std::ceil(params.worst_fraction * n));
}

} // namespace

Population initialize(const SearchSpace& space, const CgoParams& params, const Problem& problem,
                      RngStream& rng) {
    space.validate();
    params.validate();
    if (problem.dim() != space.dim())
        throw ConfigError("initialize: problem dimension " + std::to_string(problem.dim()) +
                          " does not match space dimension " + std::to_string(space.dim()));

    Population pop;
    pop.members.resize(params.population_size);
    for (Individual& ind : pop.members) {
        ind.position.resize(space.dim());
        for (std::size_t j = 0; j < space.dim(); ++j)
            ind.position[j] = space.lower[j] + rng.uniform01() * (space.upper[j] - space.lower[j]);
        ind.fitness = sanitize(problem.evaluate(ind.position));
    }
    pop.best.fitness = kInf;
    pop.best.position.assign(space.dim(), 0.0);
    sync_best(pop);
    if (std::isinf(pop.best.fitness)) pop.best = pop.members.front(); // all-infinite is legal
    pop.iteration = 0;
    return pop;
}

double levy_sigma(double beta) {
    if (!(beta > 0.0 && beta < 3.0)) throw std::domain_error("levy_sigma: beta must lie in (0, 3)");
    const double pi = 3.14159265358979323846;
    const double num = std::tgamma(1.0 + beta) * std::sin(pi * beta / 2.0);
    const double den = std::tgamma((1.0 + beta) / 2.0) * beta * std::pow(2.0, (beta - 1.0) / 2.0);
    return std::pow(num / den, 1.0 / beta);
}

double levy_step(double beta, RngStream& rng) {
    const double sigma = levy_sigma(beta);
    const double u = sigma * rng.normal();
    double v = rng.normal();
    while (std::abs(v) < 1e-300) v = rng.normal();
    return u / std::pow(std::abs(v), 1.0 / beta);
}

std::vector<double> search_candidate(std::span<const double> x, std::span<const double> best,
                                     double alpha, double step) {
    std::vector<double> candidate(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        candidate[j] = x[j] + alpha * step * std::abs(best[j] - x[j]);
    return candidate;
}

void search_step(Population& pop, const CgoParams& params, const Problem& problem,
                 RngStream& rng) {
    const SearchSpace& space = problem.space();
    const std::vector<double> best = pop.best.position; // snapshot for the whole phase
    for (Individual& ind : pop.members) {
        const double step = levy_step(params.levy_exponent, rng);
        std::vector<double> candidate = search_candidate(ind.position, best, params.step_scale, step);
        const double fitness = evaluate_clamped(problem, space, candidate);
        if (fitness < ind.fitness) {
            ind.position = std::move(candidate);
            ind.fitness = fitness;
        }
    }
    sync_best(pop);
}

double encounter_probability(int t, int t_max) {
    if (t_max < 1) throw std::domain_error("encounter_probability: t_max must be >= 1");
    if (t < 0 || t > t_max)
        throw std::domain_error("encounter_probability: t must lie in [0, t_max]");
    const double r = static_cast<double>(t) / static_cast<double>(t_max);
    return std::sqrt(r * (2.0 - r));
}

std::pair<std::vector<double>, std::vector<double>> battle_candidates(
    std::span<const double> xi, std::span<const double> xk, std::span<const double> best,
    double r2, double r3, double c1, double c2) {
    std::vector<double> ci(xi.size()), ck(xi.size());
    for (std::size_t j = 0; j < xi.size(); ++j) {
        ci[j] = r2 * xi[j] + (1.0 - r2) * xk[j] + c1 * (xi[j] - xk[j]) + c2 * (best[j] - xi[j]);
        ck[j] = r3 * xk[j] + (1.0 - r3) * xi[j] + c2 * (xk[j] - xi[j]) + c1 * (best[j] - xk[j]);
    }
    return {std::move(ci), std::move(ck)};
}

void battle_step(Population& pop, const CgoParams& params, const Problem& problem, RngStream& rng,
                 double encounter_prob) {
    (void)params;
    const int n = static_cast<int>(pop.members.size());
    if (n < 2) return; // no valid opponent
    const SearchSpace& space = problem.space();
    const std::vector<double> best = pop.best.position; // snapshot for the whole phase
    const std::size_t dim = space.dim();
    std::vector<double> ci(dim), ck(dim);
    for (int i = 0; i < n; ++i) {
        if (!(rng.uniform01() < encounter_prob)) continue;
        int k = rng.uniform_int(0, n - 2);
        if (k >= i) ++k; // uniform over {0..n-1} \ {i}
        Individual& a = pop.members[i];
        Individual& b = pop.members[k];
        for (std::size_t j = 0; j < dim; ++j) {
            const double r2 = rng.uniform01();
            const double r3 = rng.uniform01();
            const double c1 = rng.uniform(-1.0, 1.0);
            const double c2 = rng.uniform(-1.0, 1.0);
            ci[j] = r2 * a.position[j] + (1.0 - r2) * b.position[j] +
                    c1 * (a.position[j] - b.position[j]) + c2 * (best[j] - a.position[j]);
            ck[j] = r3 * b.position[j] + (1.0 - r3) * a.position[j] +
                    c2 * (b.position[j] - a.position[j]) + c1 * (best[j] - b.position[j]);
        }
        const double fi = evaluate_clamped(problem, space, ci);
        const double fk = evaluate_clamped(problem, space, ck);
        if (fi < a.fitness) {
            a.position = ci;
            a.fitness = fi;
        }
        if (fk < b.fitness) {
            b.position = ck;
            b.fitness = fk;
        }
    }
    sync_best(pop);
}

void safe_zone_step(Population& pop, const CgoParams& params, const Problem& problem,
                    RngStream& rng) {
    const SearchSpace& space = problem.space();
    const int n = static_cast<int>(pop.members.size());
    const int replaced = std::min(safe_zone_count(params), n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pop.members[a].fitness < pop.members[b].fitness;
    });
    const std::vector<double> best = pop.best.position;
    std::vector<double> candidate(space.dim());
    for (int r = n - replaced; r < n; ++r) {
        Individual& ind = pop.members[order[r]];
        const double chy = rng.cauchy();
        for (std::size_t j = 0; j < space.dim(); ++j)
            candidate[j] = best[j] + chy * (best[j] - ind.position[j]);
        ind.fitness = evaluate_clamped(problem, space, candidate);
        ind.position = candidate;
    }
    sync_best(pop);
}

RunRecord run(const SearchSpace& space, const CgoParams& params, const Problem& problem) {
    RunRecord record;
    record.seed = params.seed;
    Problem counted = problem.counted(&record.evaluations);
    RngStream rng(params.seed);

    Population pop = initialize(space, params, counted, rng);
    record.best_trace.reserve(params.max_iterations);
    for (int t = 0; t < params.max_iterations; ++t) {
        const double encounter = encounter_probability(t, params.max_iterations);
        safe_zone_step(pop, params, counted, rng);
        search_step(pop, params, counted, rng);
        battle_step(pop, params, counted, rng, encounter);
        pop.iteration = t + 1;
        record.best_trace.push_back(pop.best.fitness);
    }
    record.final_best = pop.best;
    return record;
}

} // namespace cgo
