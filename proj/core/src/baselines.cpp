#include "cgo/baselines.hpp"

#include <cmath>
#include <limits>

namespace cgo::baselines {

namespace {
double sanitize(double v) { return std::isnan(v) ? std::numeric_limits<double>::infinity() : v; }
} // namespace

RunRecord pso_run(const SearchSpace& space, const PsoParams& params, const Problem& problem) {
    space.validate();
    params.validate();
    if (problem.dim() != space.dim())
        throw ConfigError("pso_run: problem/space dimension mismatch");

    RunRecord record;
    record.seed = params.seed;
    Problem counted = problem.counted(&record.evaluations);
    RngStream rng(params.seed);

    const std::size_t dim = space.dim();
    const int n = params.swarm_size;
    std::vector<double> vmax(dim);
    for (std::size_t j = 0; j < dim; ++j)
        vmax[j] = params.velocity_clamp * (space.upper[j] - space.lower[j]);

    std::vector<std::vector<double>> pos(n, std::vector<double>(dim));
    std::vector<std::vector<double>> vel(n, std::vector<double>(dim, 0.0));
    std::vector<std::vector<double>> pbest(n);
    std::vector<double> pbest_fit(n);
    Individual gbest;
    gbest.fitness = std::numeric_limits<double>::infinity();

    for (int i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < dim; ++j)
            pos[i][j] = space.lower[j] + rng.uniform01() * (space.upper[j] - space.lower[j]);
        pbest_fit[i] = sanitize(counted.evaluate(pos[i]));
        pbest[i] = pos[i];
        if (pbest_fit[i] < gbest.fitness) gbest = {pbest[i], pbest_fit[i]};
    }
    if (std::isinf(gbest.fitness)) gbest = {pbest[0], pbest_fit[0]};

    record.best_trace.reserve(params.max_iterations);
    for (int t = 0; t < params.max_iterations; ++t) {
        for (int i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                const double r1 = rng.uniform01();
                const double r2 = rng.uniform01();
                double v = params.inertia * vel[i][j] +
                           params.cognitive * r1 * (pbest[i][j] - pos[i][j]) +
                           params.social * r2 * (gbest.position[j] - pos[i][j]);
                v = std::clamp(v, -vmax[j], vmax[j]);
                vel[i][j] = v;
                pos[i][j] = std::clamp(pos[i][j] + v, space.lower[j], space.upper[j]);
            }
            const double fit = sanitize(counted.evaluate(pos[i]));
            if (fit < pbest_fit[i]) {
                pbest_fit[i] = fit;
                pbest[i] = pos[i];
                if (fit < gbest.fitness) gbest = {pos[i], fit};
            }
        }
        record.best_trace.push_back(gbest.fitness);
    }
    record.final_best = gbest;
    return record;
}

RunRecord random_search_run(const SearchSpace& space, std::uint64_t budget, std::uint64_t seed,
                            const Problem& problem) {
    space.validate();
    if (budget < 1) throw ConfigError("random_search_run: budget must be >= 1");
    if (problem.dim() != space.dim())
        throw ConfigError("random_search_run: problem/space dimension mismatch");

    RunRecord record;
    record.seed = seed;
    Problem counted = problem.counted(&record.evaluations);
    RngStream rng(seed);

    Individual best;
    best.fitness = std::numeric_limits<double>::infinity();
    std::vector<double> x(space.dim());
    record.best_trace.reserve(budget);
    for (std::uint64_t e = 0; e < budget; ++e) {
        for (std::size_t j = 0; j < space.dim(); ++j)
            x[j] = space.lower[j] + rng.uniform01() * (space.upper[j] - space.lower[j]);
        const double fit = sanitize(counted.evaluate(x));
        if (fit < best.fitness || best.position.empty()) best = {x, fit};
        record.best_trace.push_back(best.fitness);
    }
    record.final_best = best;
    return record;
}

} // namespace cgo::baselines
