#pragma once

#include <compare>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "cgo/problem.hpp"

namespace cgo::eng {

/// Constrained design problem: minimize objective(x) subject to g_i(x) <= 0
/// and |h_j(x)| <= equality_tolerance.
struct ConstrainedProblem {
    std::string name;
    SearchSpace space;
    std::function<double(std::span<const double>)> objective;
    std::vector<std::function<double(std::span<const double>)>> inequality_constraints;
    std::vector<std::function<double(std::span<const double>)>> equality_constraints;
    double equality_tolerance = 1e-4;
    double best_known = 0.0;
};

struct PenalizedFitness {
    double objective = 0.0;
    double violation = 0.0; // >= 0; zero iff feasible
    bool feasible = false;
};

/// Total constraint violation: sum of max(0, g_i) plus max(0, |h_j| - eps).
/// NaN constraint values count as infinite violation.
double violation(const ConstrainedProblem& p, std::span<const double> x);

PenalizedFitness evaluate_penalized(const ConstrainedProblem& p, std::span<const double> x);

/// Deb-style feasibility rules: feasible beats infeasible, feasibles compare
/// by objective, infeasibles by total violation.
std::weak_ordering feasibility_compare(const PenalizedFitness& a, const PenalizedFitness& b);

/// Objective value of any infeasible point under the scalar bridge; feasible
/// objectives must stay below this for the bridge ordering to be exact.
constexpr double kInfeasibleBase = 1e10;

/// Order-preserving scalar encoding of the feasibility rules: feasible points
/// map to their objective, infeasible points to kInfeasibleBase * (1 + violation).
double penalized_scalar(const PenalizedFitness& f);

/// Bridge into the unconstrained Problem contract via penalized_scalar, so
/// greedy acceptance on plain fitness reproduces feasibility_compare.
Problem as_problem(const ConstrainedProblem& p);

/// The seven constrained design problems: tension/compression spring,
/// pressure vessel, three-bar truss, welded beam, speed reducer, gear train,
/// cantilever beam. Algebraic forms are documented in docs/engineering.md.
std::vector<ConstrainedProblem> suite();

} // namespace cgo::eng
