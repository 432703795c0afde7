#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cgo/errors.hpp"

namespace cgo {

/// Box-constrained search space: lower[j] < upper[j] for every coordinate.
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;

    SearchSpace() = default;
    SearchSpace(std::vector<double> lo, std::vector<double> up)
        : lower(std::move(lo)), upper(std::move(up)) {
        validate();
    }

    /// Uniform cube [lo, hi]^dim.
    static SearchSpace cube(std::size_t dim, double lo, double hi) {
        return SearchSpace(std::vector<double>(dim, lo), std::vector<double>(dim, hi));
    }

    std::size_t dim() const { return lower.size(); }

    void validate() const {
        if (lower.empty() || lower.size() != upper.size())
            throw ConfigError("search space: lower/upper must be non-empty and equal length");
        for (std::size_t j = 0; j < lower.size(); ++j)
            if (!(lower[j] < upper[j]))
                throw ConfigError("search space: lower[j] < upper[j] required at coordinate " +
                                  std::to_string(j));
    }

    bool contains(std::span<const double> x) const {
        if (x.size() != dim()) return false;
        for (std::size_t j = 0; j < x.size(); ++j)
            if (x[j] < lower[j] || x[j] > upper[j]) return false;
        return true;
    }

    /// Clamp each coordinate to the nearest bound.
    void clamp(std::span<double> x) const {
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] < lower[j]) x[j] = lower[j];
            else if (x[j] > upper[j]) x[j] = upper[j];
        }
    }
};

} // namespace cgo
