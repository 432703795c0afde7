#pragma once

#include <cstdint>
#include <vector>

#include "cgo/params.hpp"
#include "cgo/problem.hpp"
#include "cgo/rng.hpp"

namespace cgo {

/// Candidate solution with its cached objective value. Positions always lie
/// inside the search box; NaN objectives are stored as +infinity.
struct Individual {
    std::vector<double> position;
    double fitness = 0.0;
};

/// CGO population state. `best` is a detached copy of the best individual
/// found so far, never an alias into `members`: the safe-zone phase replaces
/// members unconditionally and must not destroy the incumbent.
struct Population {
    std::vector<Individual> members;
    Individual best;
    int iteration = 0;
};

/// Per-run result: best-so-far fitness per iteration, the final incumbent,
/// and the exact count of objective evaluations.
struct RunRecord {
    std::vector<double> best_trace;
    Individual final_best;
    std::uint64_t evaluations = 0;
    std::uint64_t seed = 0;
};

/// Drop N individuals uniformly into the box, evaluate them, pick the best.
Population initialize(const SearchSpace& space, const CgoParams& params, const Problem& problem,
                      RngStream& rng);

/// Scale factor of the Mantegna Levy generator,
/// sigma = [Gamma(1+b) sin(pi b/2) / (Gamma((1+b)/2) b 2^((b-1)/2))]^(1/b).
/// Throws std::domain_error unless 0 < beta < 3.
double levy_sigma(double beta);

/// One heavy-tailed step S = u / |v|^(1/beta), u ~ N(0, sigma^2), v ~ N(0, 1).
/// |v| below 1e-300 is redrawn to keep the quotient finite.
double levy_step(double beta, RngStream& rng);

/// Search-phase candidate: x + alpha * step * |best - x| (elementwise
/// absolute difference), before clamping.
std::vector<double> search_candidate(std::span<const double> x, std::span<const double> best,
                                     double alpha, double step);

/// Levy-flight search over all members. Each individual draws its own step
/// scalar, shared across its dimensions; a candidate replaces its member only
/// on strict fitness improvement. Best is re-synced at the end.
void search_step(Population& pop, const CgoParams& params, const Problem& problem, RngStream& rng);

/// Encounter probability E = sqrt(2 (t/Tmax) - (t/Tmax)^2); 0 at t = 0,
/// 1 at t = Tmax, non-decreasing in between. Throws std::domain_error for
/// t outside [0, Tmax].
double encounter_probability(int t, int t_max);

/// Battle-phase candidate pair for opponents at xi and xk:
///   ci = r2 xi + (1-r2) xk + c1 (xi - xk) + c2 (best - xi)
///   ck = r3 xk + (1-r3) xi + c2 (xk - xi) + c1 (best - xk)
/// computed per dimension, before clamping.
std::pair<std::vector<double>, std::vector<double>> battle_candidates(
    std::span<const double> xi, std::span<const double> xk, std::span<const double> best,
    double r2, double r3, double c1, double c2);

/// Pairwise battles, gated per individual by a uniform draw against
/// `encounter_prob`. The opponent is drawn uniformly among the other members
/// and fresh r2, r3 ~ U(0,1), c1, c2 ~ U(-1,1) are drawn per dimension; both
/// participants accept their candidate independently and only on strict
/// improvement. Populations of one member skip the phase.
void battle_step(Population& pop, const CgoParams& params, const Problem& problem, RngStream& rng,
                 double encounter_prob);

/// Unconditionally replace the ceil(worst_fraction * N) worst members (stable
/// fitness order, ties by index) with best + chy * (best - x), one standard
/// Cauchy draw chy per member. Best is re-synced afterwards.
void safe_zone_step(Population& pop, const CgoParams& params, const Problem& problem,
                    RngStream& rng);

/// Full optimizer loop: initialize, then per iteration (in this order)
/// encounter probability, safe-zone jumps, search phase, battle phase, trace
/// update. Deterministic given (space, params, problem).
RunRecord run(const SearchSpace& space, const CgoParams& params, const Problem& problem);

} // namespace cgo
