#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "cgo/errors.hpp"

namespace cgo::stats {

/// Final best values of one algorithm on one problem over independent runs.
struct RunSet {
    std::string algorithm;
    std::string problem;
    std::vector<double> final_bests;
    std::vector<std::uint64_t> seeds;

    void validate() const;
};

struct SummaryStats {
    double best = 0.0;
    double stddev = 0.0; // sample standard deviation (n-1 denominator)
    double mean = 0.0;
};

/// Min, sample standard deviation, arithmetic mean. A single-value set has
/// stddev 0 (degenerate n-1 case, warned once on stderr).
SummaryStats summarize(const RunSet& rs);
SummaryStats summarize(std::span<const double> values);

/// Two-sided Wilcoxon rank-sum p-value. Tie-free small samples
/// (min size <= 8) use the exact rank-sum distribution; everything else uses
/// the normal approximation with tie correction and continuity correction.
/// Samples that are identical across both sides give p = 1 by convention.
/// Requires at least 3 values per side.
double wilcoxon_ranksum(std::span<const double> a, std::span<const double> b);

/// The normal-approximation path on its own (tie + continuity corrected).
double wilcoxon_ranksum_normal(std::span<const double> a, std::span<const double> b);

/// One summary row per (problem, algorithm) cell plus pairwise p-values
/// against the reference algorithm (first column).
struct ComparisonTable {
    std::vector<std::string> algorithms; // column order; first is the reference
    struct Row {
        std::string problem;
        std::string algorithm;
        SummaryStats stats;
        std::uint64_t infeasible_runs = 0; // constrained problems only
    };
    std::vector<Row> rows;
    struct PairwiseP {
        std::string problem;
        std::string algorithm; // compared against the reference
        double p = 1.0;
    };
    std::vector<PairwiseP> p_values;

    const Row* find(const std::string& problem, const std::string& algorithm) const;

    /// Tables-style layout: one (problem, metric) line per row, one column
    /// per algorithm.
    void write_csv(std::ostream& out) const;
    void write_pvalues_csv(std::ostream& out) const;
    std::string to_json() const;
};

} // namespace cgo::stats
