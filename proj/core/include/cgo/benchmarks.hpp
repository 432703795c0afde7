#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cgo/problem.hpp"

namespace cgo::bench {

/// Problem families, used to tag suite coverage.
enum class Category { Unimodal, SimpleMultimodal, Hybrid, Composition };

std::string_view category_name(Category c);

/// Classic base functions, all defined for any dimension >= 1.
double sphere(std::span<const double> x);
double bent_cigar(std::span<const double> x);
double zakharov(std::span<const double> x);
double rastrigin(std::span<const double> x);
double ackley(std::span<const double> x);
double griewank(std::span<const double> x);
double rosenbrock(std::span<const double> x);
/// Schwefel rescaled to [-100, 100]: the inner variable is 5x, so the
/// classic optimizer 420.9687... maps to x = 84.1937... inside the box.
double schwefel(std::span<const double> x);

struct BenchmarkProblem {
    std::string name;
    Category category;
    SearchSpace space;
    std::function<double(std::span<const double>)> base;
    std::optional<double> known_optimum;
    std::optional<std::vector<double>> known_optimizer;
    std::optional<std::vector<double>> shift;
    std::optional<std::vector<std::vector<double>>> rotation; // dim x dim, orthogonal

    Problem as_problem() const;
};

/// f(R (x - shift)) for the problem's base function; pure and deterministic.
double evaluate(const BenchmarkProblem& problem, std::span<const double> x);

/// At least 12 problems over [-100, 100]^dim covering all four categories:
/// three unimodal, five simple multimodal, two fixed two-function
/// concatenation hybrids, and two min-of-shifted-components compositions.
std::vector<BenchmarkProblem> standard_suite(std::size_t dim);

/// Parse whitespace-separated reals: dim shift values followed by a row-major
/// dim x dim rotation matrix, validated orthogonal to 1e-6. Throws
/// IngestionError with line/position context on failure.
std::pair<std::vector<double>, std::vector<std::vector<double>>> load_offsets(
    const std::filesystem::path& path, std::size_t dim);

} // namespace cgo::bench
