#pragma once

#include <functional>
#include <span>
#include <string>
#include <utility>

#include "cgo/search_space.hpp"

namespace cgo {

/// Minimization problem: a named objective over a box-constrained space.
/// Objectives must be pure (no shared mutable state), so problems can be
/// evaluated concurrently from independent runs.
class Problem {
  public:
    using Objective = std::function<double(std::span<const double>)>;

    Problem() = default;
    Problem(std::string name, SearchSpace space, Objective objective)
        : name_(std::move(name)), space_(std::move(space)), objective_(std::move(objective)) {}

    double evaluate(std::span<const double> x) const {
        if (x.size() != space_.dim())
            throw ConfigError("problem '" + name_ + "': expected dimension " +
                              std::to_string(space_.dim()) + ", got " + std::to_string(x.size()));
        return objective_(x);
    }

    const std::string& name() const { return name_; }
    const SearchSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }

    /// Same problem with every objective call counted through `counter`.
    Problem counted(std::uint64_t* counter) const {
        Objective inner = objective_;
        return Problem(name_, space_, [inner, counter](std::span<const double> x) {
            ++*counter;
            return inner(x);
        });
    }

  private:
    std::string name_;
    SearchSpace space_;
    Objective objective_;
};

} // namespace cgo
