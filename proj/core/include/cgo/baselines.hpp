#pragma once

#include "cgo/optimizer.hpp"

namespace cgo::baselines {

/// Canonical global-best PSO settings (constriction-equivalent defaults).
struct PsoParams {
    int swarm_size = 50;
    int max_iterations = 1000;
    double inertia = 0.729;
    double cognitive = 1.49445;
    double social = 1.49445;
    double velocity_clamp = 1.0; // fraction of (upper - lower), per dimension
    std::uint64_t seed = 0;

    void validate() const {
        if (swarm_size < 1) throw ConfigError("pso params: swarm_size must be >= 1");
        if (max_iterations < 0) throw ConfigError("pso params: max_iterations must be >= 0");
        if (!(inertia >= 0.0 && inertia <= 1.0))
            throw ConfigError("pso params: inertia must lie in [0, 1]");
        if (!(cognitive > 0.0) || !(social > 0.0))
            throw ConfigError("pso params: cognitive/social factors must be > 0");
        if (!(velocity_clamp > 0.0 && velocity_clamp <= 1.0))
            throw ConfigError("pso params: velocity_clamp must lie in (0, 1]");
    }
};

/// Standard inertia-weight gbest PSO with per-dimension velocity clamping.
RunRecord pso_run(const SearchSpace& space, const PsoParams& params, const Problem& problem);

/// Uniform sampling baseline; the trace is the running minimum over `budget`
/// evaluations.
RunRecord random_search_run(const SearchSpace& space, std::uint64_t budget, std::uint64_t seed,
                            const Problem& problem);

} // namespace cgo::baselines
