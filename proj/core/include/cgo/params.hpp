#pragma once

#include <cstdint>

#include "cgo/errors.hpp"

namespace cgo {

/// Tunables of the CGO main loop. Defaults are the published settings:
/// step scale 1, Levy exponent 1.5, worst fraction 0.2.
struct CgoParams {
    int population_size = 50;
    int max_iterations = 1000;
    double step_scale = 1.0;     // alpha
    double levy_exponent = 1.5;  // beta, in (0, 3)
    double worst_fraction = 0.2; // share of the population jumped toward the best
    std::uint64_t seed = 0;

    void validate() const {
        if (population_size < 2)
            throw ConfigError("cgo params: population_size must be >= 2 (battles need an opponent)");
        if (max_iterations < 0)
            throw ConfigError("cgo params: max_iterations must be >= 0");
        if (!(levy_exponent > 0.0 && levy_exponent < 3.0))
            throw ConfigError("cgo params: levy_exponent must lie in (0, 3)");
        if (!(worst_fraction > 0.0 && worst_fraction < 1.0))
            throw ConfigError("cgo params: worst_fraction must lie in (0, 1)");
    }
};

} // namespace cgo
