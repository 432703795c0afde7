#include "cgo/engineering.hpp"

#include <cmath>
#include <limits>

namespace cgo::eng {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
double hinge(double g) { return std::isnan(g) ? kInf : std::max(0.0, g); }
} // namespace

double violation(const ConstrainedProblem& p, std::span<const double> x) {
    double total = 0.0;
    for (const auto& g : p.inequality_constraints) total += hinge(g(x));
    for (const auto& h : p.equality_constraints) {
        const double v = h(x);
        total += std::isnan(v) ? kInf : std::max(0.0, std::abs(v) - p.equality_tolerance);
    }
    return total;
}

PenalizedFitness evaluate_penalized(const ConstrainedProblem& p, std::span<const double> x) {
    PenalizedFitness f;
    f.violation = violation(p, x);
    f.feasible = f.violation == 0.0;
    const double obj = p.objective(x);
    f.objective = std::isnan(obj) ? kInf : obj;
    return f;
}

std::weak_ordering feasibility_compare(const PenalizedFitness& a, const PenalizedFitness& b) {
    if (a.feasible != b.feasible)
        return a.feasible ? std::weak_ordering::less : std::weak_ordering::greater;
    const double lhs = a.feasible ? a.objective : a.violation;
    const double rhs = b.feasible ? b.objective : b.violation;
    if (lhs < rhs) return std::weak_ordering::less;
    if (lhs > rhs) return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

double penalized_scalar(const PenalizedFitness& f) {
    if (f.feasible) return f.objective;
    return kInfeasibleBase * (1.0 + f.violation);
}

Problem as_problem(const ConstrainedProblem& p) {
    ConstrainedProblem copy = p;
    return Problem(p.name, p.space, [copy](std::span<const double> x) {
        return penalized_scalar(evaluate_penalized(copy, x));
    });
}

namespace {

using X = std::span<const double>;

ConstrainedProblem spring_design() {
    // Variables: wire diameter d, mean coil diameter D, active coils N.
    ConstrainedProblem p;
    p.name = "spring";
    p.space = SearchSpace({0.05, 0.25, 2.0}, {2.0, 1.3, 15.0});
    p.objective = [](X x) { return (x[2] + 2.0) * x[1] * x[0] * x[0]; };
    p.inequality_constraints = {
        [](X x) { return 1.0 - x[1] * x[1] * x[1] * x[2] / (71785.0 * std::pow(x[0], 4)); },
        [](X x) {
            return (4.0 * x[1] * x[1] - x[0] * x[1]) /
                       (12566.0 * (x[1] * std::pow(x[0], 3) - std::pow(x[0], 4))) +
                   1.0 / (5108.0 * x[0] * x[0]) - 1.0;
        },
        [](X x) { return 1.0 - 140.45 * x[0] / (x[1] * x[1] * x[2]); },
    };
    p.best_known = 1.2665233e-2;
    return p;
}

ConstrainedProblem pressure_vessel() {
    // Variables: shell thickness Ts, head thickness Th, inner radius R, length L.
    ConstrainedProblem p;
    p.name = "pressure_vessel";
    p.space = SearchSpace({0.0, 0.0, 10.0, 10.0}, {99.0, 99.0, 200.0, 200.0});
    p.objective = [](X x) {
        return 0.6224 * x[0] * x[2] * x[3] + 1.7781 * x[1] * x[2] * x[2] +
               3.1661 * x[0] * x[0] * x[3] + 19.84 * x[0] * x[0] * x[2];
    };
    constexpr double pi = 3.14159265358979323846;
    p.inequality_constraints = {
        [](X x) { return -x[0] + 0.0193 * x[2]; },
        [](X x) { return -x[1] + 0.00954 * x[2]; },
        [](X x) {
            return -pi * x[2] * x[2] * x[3] - 4.0 / 3.0 * pi * std::pow(x[2], 3) + 1296000.0;
        },
        [](X x) { return x[3] - 240.0; },
    };
    p.best_known = 5.8853328e3;
    return p;
}

ConstrainedProblem three_bar_truss() {
    // Variables: cross-section areas of the outer and middle bars.
    ConstrainedProblem p;
    p.name = "three_bar_truss";
    p.space = SearchSpace({0.0, 0.0}, {1.0, 1.0});
    constexpr double load = 2.0, stress = 2.0, length = 100.0;
    const double rt2 = std::sqrt(2.0);
    p.objective = [rt2](X x) { return (2.0 * rt2 * x[0] + x[1]) * length; };
    p.inequality_constraints = {
        [rt2](X x) {
            return (rt2 * x[0] + x[1]) / (rt2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * load - stress;
        },
        [rt2](X x) { return x[1] / (rt2 * x[0] * x[0] + 2.0 * x[0] * x[1]) * load - stress; },
        [rt2](X x) { return 1.0 / (rt2 * x[1] + x[0]) * load - stress; },
    };
    p.best_known = 2.6389584e2;
    return p;
}

ConstrainedProblem welded_beam() {
    // Variables: weld thickness h, weld length l, bar height t, bar thickness b.
    // Shear uses the polar moment J = 2 sqrt(2) h l (l^2/4 + ((h+t)/2)^2).
    ConstrainedProblem p;
    p.name = "welded_beam";
    p.space = SearchSpace({0.125, 0.1, 0.1, 0.1}, {2.0, 10.0, 10.0, 2.0});
    constexpr double load = 6000.0, beam_len = 14.0, elastic = 30e6, shear_mod = 12e6;
    constexpr double tau_max = 13600.0, sigma_max = 30000.0, delta_max = 0.25;
    auto shear_stress = [](X x) {
        const double rt2 = std::sqrt(2.0);
        const double tau_p = load / (rt2 * x[0] * x[1]);
        const double moment = load * (beam_len + x[1] / 2.0);
        const double half = (x[0] + x[2]) / 2.0;
        const double r = std::sqrt(x[1] * x[1] / 4.0 + half * half);
        const double j = 2.0 * (rt2 * x[0] * x[1] * (x[1] * x[1] / 4.0 + half * half));
        const double tau_pp = moment * r / j;
        return std::sqrt(tau_p * tau_p + 2.0 * tau_p * tau_pp * x[1] / (2.0 * r) +
                         tau_pp * tau_pp);
    };
    auto buckling = [](X x) {
        return 4.013 * elastic * std::sqrt(x[2] * x[2] * std::pow(x[3], 6) / 36.0) /
               (beam_len * beam_len) *
               (1.0 - x[2] / (2.0 * beam_len) * std::sqrt(elastic / (4.0 * shear_mod)));
    };
    p.objective = [](X x) {
        return 1.10471 * x[0] * x[0] * x[1] + 0.04811 * x[2] * x[3] * (14.0 + x[1]);
    };
    p.inequality_constraints = {
        [shear_stress](X x) { return shear_stress(x) - tau_max; },
        [](X x) { return 6.0 * load * beam_len / (x[3] * x[2] * x[2]) - sigma_max; },
        [](X x) { return x[0] - x[3]; },
        [buckling](X x) { return load - buckling(x); },
        [](X x) {
            return 4.0 * load * std::pow(beam_len, 3) / (elastic * std::pow(x[2], 3) * x[3]) -
                   delta_max;
        },
    };
    p.best_known = 1.6702177;
    return p;
}

ConstrainedProblem speed_reducer() {
    // Golinski speed reducer: gear face width, tooth module, pinion teeth,
    // two shaft lengths, two shaft diameters.
    ConstrainedProblem p;
    p.name = "speed_reducer";
    p.space = SearchSpace({2.6, 0.7, 17.0, 7.3, 7.3, 2.9, 5.0},
                          {3.6, 0.8, 28.0, 8.3, 8.3, 3.9, 5.5});
    p.objective = [](X x) {
        return 0.7854 * x[0] * x[1] * x[1] * (3.3333 * x[2] * x[2] + 14.9334 * x[2] - 43.0934) -
               1.508 * x[0] * (x[5] * x[5] + x[6] * x[6]) +
               7.4777 * (std::pow(x[5], 3) + std::pow(x[6], 3)) +
               0.7854 * (x[3] * x[5] * x[5] + x[4] * x[6] * x[6]);
    };
    p.inequality_constraints = {
        [](X x) { return 27.0 / (x[0] * x[1] * x[1] * x[2]) - 1.0; },
        [](X x) { return 397.5 / (x[0] * x[1] * x[1] * x[2] * x[2]) - 1.0; },
        [](X x) { return 1.93 * std::pow(x[3], 3) / (x[1] * x[2] * std::pow(x[5], 4)) - 1.0; },
        [](X x) { return 1.93 * std::pow(x[4], 3) / (x[1] * x[2] * std::pow(x[6], 4)) - 1.0; },
        [](X x) {
            const double a = 745.0 * x[3] / (x[1] * x[2]);
            return std::sqrt(a * a + 16.9e6) / (110.0 * std::pow(x[5], 3)) - 1.0;
        },
        [](X x) {
            const double a = 745.0 * x[4] / (x[1] * x[2]);
            return std::sqrt(a * a + 157.5e6) / (85.0 * std::pow(x[6], 3)) - 1.0;
        },
        [](X x) { return x[1] * x[2] / 40.0 - 1.0; },
        [](X x) { return 5.0 * x[1] / x[0] - 1.0; },
        [](X x) { return x[0] / (12.0 * x[1]) - 1.0; },
        [](X x) { return (1.5 * x[5] + 1.9) / x[3] - 1.0; },
        [](X x) { return (1.1 * x[6] + 1.9) / x[4] - 1.0; },
    };
    p.best_known = 2.9944245e3;
    return p;
}

ConstrainedProblem gear_train() {
    // Teeth counts are integer by convention. The relaxation rounds to the
    // nearest integer inside the objective only; the constraints stay
    // continuous in x, so the violation is continuous too. The equality pins
    // the transmission-ratio error and the inequality requires a reduction
    // drive (ratio below one).
    ConstrainedProblem p;
    p.name = "gear_train";
    p.space = SearchSpace::cube(4, 12.0, 60.0);
    constexpr double target = 1.0 / 6.931;
    p.objective = [](X x) {
        const double ratio =
            (std::round(x[1]) * std::round(x[2])) / (std::round(x[0]) * std::round(x[3]));
        const double e = target - ratio;
        return e * e;
    };
    auto ratio = [](X x) { return (x[1] * x[2]) / (x[0] * x[3]); };
    p.inequality_constraints = {[ratio](X x) { return ratio(x) - 1.0; }};
    p.equality_constraints = {[ratio](X x) { return target - ratio(x); }};
    p.equality_tolerance = 1e-4;
    p.best_known = 0.0;
    return p;
}

ConstrainedProblem cantilever_beam() {
    // Five hollow square block heights of a stepped cantilever.
    ConstrainedProblem p;
    p.name = "cantilever_beam";
    p.space = SearchSpace::cube(5, 0.01, 100.0);
    p.objective = [](X x) { return 0.0624 * (x[0] + x[1] + x[2] + x[3] + x[4]); };
    p.inequality_constraints = {[](X x) {
        return 61.0 / std::pow(x[0], 3) + 37.0 / std::pow(x[1], 3) + 19.0 / std::pow(x[2], 3) +
               7.0 / std::pow(x[3], 3) + 1.0 / std::pow(x[4], 3) - 1.0;
    }};
    p.best_known = 1.3395842;
    return p;
}

} // namespace

std::vector<ConstrainedProblem> suite() {
    return {spring_design(), pressure_vessel(), three_bar_truss(), welded_beam(),
            speed_reducer(), gear_train(),     cantilever_beam()};
}

} // namespace cgo::eng
