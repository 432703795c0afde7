#include "cgo/benchmarks.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "cgo/rng.hpp"

namespace cgo::bench {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kDomainLo = -100.0;
constexpr double kDomainHi = 100.0;
} // namespace

std::string_view category_name(Category c) {
    switch (c) {
    case Category::Unimodal: return "unimodal";
    case Category::SimpleMultimodal: return "simple_multimodal";
    case Category::Hybrid: return "hybrid";
    case Category::Composition: return "composition";
    }
    return "unknown";
}

double sphere(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double bent_cigar(std::span<const double> x) {
    double s = x[0] * x[0];
    for (std::size_t j = 1; j < x.size(); ++j) s += 1e6 * x[j] * x[j];
    return s;
}

double zakharov(std::span<const double> x) {
    double s1 = 0.0, s2 = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        s1 += x[j] * x[j];
        s2 += 0.5 * static_cast<double>(j + 1) * x[j];
    }
    return s1 + s2 * s2 + s2 * s2 * s2 * s2;
}

double rastrigin(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
    return s;
}

double ackley(std::span<const double> x) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * kPi * v);
    }
    return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::exp(1.0);
}

double griewank(std::span<const double> x) {
    double s = 0.0, p = 1.0;
    for (std::size_t j = 0; j < x.size(); ++j) {
        s += x[j] * x[j] / 4000.0;
        p *= std::cos(x[j] / std::sqrt(static_cast<double>(j + 1)));
    }
    return s - p + 1.0;
}

double rosenbrock(std::span<const double> x) {
    double s = 0.0;
    for (std::size_t j = 0; j + 1 < x.size(); ++j) {
        const double a = x[j + 1] - x[j] * x[j];
        const double b = 1.0 - x[j];
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double schwefel(std::span<const double> x) {
    // Per-dimension offset chosen so the minimum value is 0 (at z = 420.9687...).
    constexpr double kOffset = 418.9828872724337;
    double s = kOffset * static_cast<double>(x.size());
    for (double v : x) {
        const double z = 5.0 * v;
        s -= z * std::sin(std::sqrt(std::abs(z)));
    }
    return s;
}

double evaluate(const BenchmarkProblem& problem, std::span<const double> x) {
    const std::size_t dim = problem.space.dim();
    if (x.size() != dim)
        throw ConfigError("benchmark '" + problem.name + "': expected dimension " +
                          std::to_string(dim) + ", got " + std::to_string(x.size()));
    std::vector<double> z(x.begin(), x.end());
    if (problem.shift)
        for (std::size_t j = 0; j < dim; ++j) z[j] -= (*problem.shift)[j];
    if (problem.rotation) {
        std::vector<double> rz(dim, 0.0);
        const auto& rot = *problem.rotation;
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j) rz[i] += rot[i][j] * z[j];
        z = std::move(rz);
    }
    return problem.base(z);
}

Problem BenchmarkProblem::as_problem() const {
    BenchmarkProblem copy = *this;
    return Problem(name, space,
                   [copy](std::span<const double> x) { return evaluate(copy, x); });
}

namespace {

BenchmarkProblem make_simple(std::string name, Category cat, std::size_t dim,
                             double (*fn)(std::span<const double>),
                             std::vector<double> optimizer) {
    BenchmarkProblem p;
    p.name = std::move(name);
    p.category = cat;
    p.space = SearchSpace::cube(dim, kDomainLo, kDomainHi);
    p.base = fn;
    p.known_optimum = 0.0;
    p.known_optimizer = std::move(optimizer);
    return p;
}

// First d/2 coordinates through `first`, the rest through `second`.
std::function<double(std::span<const double>)> concat(double (*first)(std::span<const double>),
                                                      double (*second)(std::span<const double>)) {
    return [first, second](std::span<const double> x) {
        const std::size_t half = x.size() / 2;
        return first(x.subspan(0, half)) + second(x.subspan(half));
    };
}

struct CompositionComponent {
    double (*fn)(std::span<const double>);
    std::vector<double> center;
    double scale;
    double bias;
};

// min_k { scale_k * f_k(x - center_k) + bias_k }; the zero-bias component
// carries the global optimum at its center.
std::function<double(std::span<const double>)> compose(std::vector<CompositionComponent> parts) {
    return [parts = std::move(parts)](std::span<const double> x) {
        double best = std::numeric_limits<double>::infinity();
        std::vector<double> z(x.size());
        for (const CompositionComponent& c : parts) {
            for (std::size_t j = 0; j < x.size(); ++j) z[j] = x[j] - c.center[j];
            best = std::min(best, c.scale * c.fn(z) + c.bias);
        }
        return best;
    };
}

std::vector<double> fixed_centers(std::uint64_t seed, std::size_t dim) {
    RngStream rng(seed);
    std::vector<double> c(dim);
    for (double& v : c) v = rng.uniform(-80.0, 80.0);
    return c;
}

} // namespace

std::vector<BenchmarkProblem> standard_suite(std::size_t dim) {
    if (dim < 2) throw ConfigError("standard_suite: dim must be >= 2");
    std::vector<BenchmarkProblem> suite;

    suite.push_back(make_simple("sphere", Category::Unimodal, dim, sphere,
                                std::vector<double>(dim, 0.0)));
    suite.push_back(make_simple("bent_cigar", Category::Unimodal, dim, bent_cigar,
                                std::vector<double>(dim, 0.0)));
    suite.push_back(make_simple("zakharov", Category::Unimodal, dim, zakharov,
                                std::vector<double>(dim, 0.0)));

    suite.push_back(make_simple("rastrigin", Category::SimpleMultimodal, dim, rastrigin,
                                std::vector<double>(dim, 0.0)));
    suite.push_back(make_simple("ackley", Category::SimpleMultimodal, dim, ackley,
                                std::vector<double>(dim, 0.0)));
    suite.push_back(make_simple("griewank", Category::SimpleMultimodal, dim, griewank,
                                std::vector<double>(dim, 0.0)));
    suite.push_back(make_simple("rosenbrock", Category::SimpleMultimodal, dim, rosenbrock,
                                std::vector<double>(dim, 1.0)));
    suite.push_back(make_simple("schwefel", Category::SimpleMultimodal, dim, schwefel,
                                std::vector<double>(dim, 84.19374927199641)));

    {
        BenchmarkProblem p;
        p.name = "hybrid_sphere_rastrigin";
        p.category = Category::Hybrid;
        p.space = SearchSpace::cube(dim, kDomainLo, kDomainHi);
        p.base = concat(sphere, rastrigin);
        p.known_optimum = 0.0;
        p.known_optimizer = std::vector<double>(dim, 0.0);
        suite.push_back(std::move(p));
    }
    {
        BenchmarkProblem p;
        p.name = "hybrid_ackley_rosenbrock";
        p.category = Category::Hybrid;
        p.space = SearchSpace::cube(dim, kDomainLo, kDomainHi);
        p.base = concat(ackley, rosenbrock);
        p.known_optimum = 0.0;
        std::vector<double> opt(dim, 1.0);
        for (std::size_t j = 0; j < dim / 2; ++j) opt[j] = 0.0;
        p.known_optimizer = std::move(opt);
        suite.push_back(std::move(p));
    }

    {
        BenchmarkProblem p;
        p.name = "composition_1";
        p.category = Category::Composition;
        p.space = SearchSpace::cube(dim, kDomainLo, kDomainHi);
        std::vector<double> c0 = fixed_centers(0x5eed0001, dim);
        p.base = compose({{sphere, c0, 1.0, 0.0},
                          {rastrigin, fixed_centers(0x5eed0002, dim), 1.0, 100.0},
                          {ackley, fixed_centers(0x5eed0003, dim), 10.0, 200.0}});
        p.known_optimum = 0.0;
        p.known_optimizer = std::move(c0);
        suite.push_back(std::move(p));
    }
    {
        BenchmarkProblem p;
        p.name = "composition_2";
        p.category = Category::Composition;
        p.space = SearchSpace::cube(dim, kDomainLo, kDomainHi);
        std::vector<double> c0 = fixed_centers(0x5eed0004, dim);
        p.base = compose({{ackley, c0, 1.0, 0.0},
                          {griewank, fixed_centers(0x5eed0005, dim), 10.0, 100.0},
                          {sphere, fixed_centers(0x5eed0006, dim), 0.1, 200.0}});
        p.known_optimum = 0.0;
        p.known_optimizer = std::move(c0);
        suite.push_back(std::move(p));
    }

    return suite;
}

namespace {

void check_orthogonal(const std::vector<std::vector<double>>& rot, double tol,
                      const std::string& where) {
    const std::size_t dim = rot.size();
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            double dot = 0.0;
            for (std::size_t k = 0; k < dim; ++k) dot += rot[k][i] * rot[k][j];
            const double expected = (i == j) ? 1.0 : 0.0;
            if (std::abs(dot - expected) > tol)
                throw IngestionError(where + ": rotation is not orthogonal (|R^T R - I| = " +
                                     std::to_string(std::abs(dot - expected)) + " at entry (" +
                                     std::to_string(i) + "," + std::to_string(j) + "))");
        }
    }
}

} // namespace

std::pair<std::vector<double>, std::vector<std::vector<double>>> load_offsets(
    const std::filesystem::path& path, std::size_t dim) {
    std::ifstream in(path);
    if (!in) throw IngestionError("load_offsets: cannot open '" + path.string() + "'");

    const std::size_t expected = dim + dim * dim;
    std::vector<double> values;
    values.reserve(expected);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string token;
        std::size_t col = 0;
        while (ls >> token) {
            ++col;
            try {
                std::size_t used = 0;
                const double v = std::stod(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
                values.push_back(v);
            } catch (const std::exception&) {
                throw IngestionError("load_offsets: '" + path.string() + "' line " +
                                     std::to_string(line_no) + ", token " + std::to_string(col) +
                                     ": cannot parse '" + token + "' as a real");
            }
            if (values.size() > expected)
                throw IngestionError("load_offsets: '" + path.string() + "' line " +
                                     std::to_string(line_no) + ": expected " +
                                     std::to_string(expected) + " values, found more");
        }
    }
    if (values.size() != expected)
        throw IngestionError("load_offsets: '" + path.string() + "': expected " +
                             std::to_string(expected) + " values (dim + dim*dim), found " +
                             std::to_string(values.size()));

    std::vector<double> shift(values.begin(), values.begin() + static_cast<long>(dim));
    std::vector<std::vector<double>> rot(dim, std::vector<double>(dim));
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) rot[i][j] = values[dim + i * dim + j];
    check_orthogonal(rot, 1e-6, "load_offsets: '" + path.string() + "'");
    return {std::move(shift), std::move(rot)};
}

} // namespace cgo::bench
