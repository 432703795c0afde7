#include "cgo/stats.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <map>
#include <numeric>
#include <set>

#include <json.hpp>

#include "cgo/format.hpp"

namespace cgo::stats {

void RunSet::validate() const {
    if (final_bests.empty()) throw ConfigError("run set: at least one run required");
    std::set<std::uint64_t> unique(seeds.begin(), seeds.end());
    if (unique.size() != seeds.size()) throw ConfigError("run set: seeds must be distinct");
}

SummaryStats summarize(std::span<const double> values) {
    if (values.empty()) throw ConfigError("summarize: empty sample");
    SummaryStats s;
    s.best = *std::min_element(values.begin(), values.end());
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
             static_cast<double>(values.size());
    if (values.size() == 1) {
        std::cerr << "summarize: single-run sample, reporting stddev 0\n";
        s.stddev = 0.0;
        return s;
    }
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(sq / static_cast<double>(values.size() - 1));
    return s;
}

SummaryStats summarize(const RunSet& rs) {
    rs.validate();
    return summarize(std::span<const double>(rs.final_bests));
}

namespace {

struct RankInfo {
    double rank_sum_a = 0.0; // pooled ranks of sample a (average ranks on ties)
    bool has_ties = false;
    double tie_term = 0.0; // sum of (t^3 - t) over tie groups
};

RankInfo pooled_ranks(std::span<const double> a, std::span<const double> b) {
    struct Tagged {
        double value;
        bool from_a;
    };
    std::vector<Tagged> pool;
    pool.reserve(a.size() + b.size());
    for (double v : a) pool.push_back({v, true});
    for (double v : b) pool.push_back({v, false});
    std::sort(pool.begin(), pool.end(),
              [](const Tagged& x, const Tagged& y) { return x.value < y.value; });

    RankInfo info;
    std::size_t i = 0;
    while (i < pool.size()) {
        std::size_t j = i;
        while (j < pool.size() && pool[j].value == pool[i].value) ++j;
        const double t = static_cast<double>(j - i);
        const double avg_rank = (static_cast<double>(i + 1) + static_cast<double>(j)) / 2.0;
        for (std::size_t k = i; k < j; ++k)
            if (pool[k].from_a) info.rank_sum_a += avg_rank;
        if (t > 1.0) {
            info.has_ties = true;
            info.tie_term += t * t * t - t;
        }
        i = j;
    }
    return info;
}

double normal_sf(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double normal_p(std::size_t n1, std::size_t n2, const RankInfo& info) {
    const double fn1 = static_cast<double>(n1);
    const double fn2 = static_cast<double>(n2);
    const double n = fn1 + fn2;
    const double mu = fn1 * (n + 1.0) / 2.0;
    const double var = fn1 * fn2 / 12.0 * ((n + 1.0) - info.tie_term / (n * (n - 1.0)));
    if (var <= 0.0) return 1.0; // every pooled value identical
    const double sigma = std::sqrt(var);
    const double w = info.rank_sum_a;
    double z;
    if (w > mu) z = (w - mu - 0.5) / sigma;
    else if (w < mu) z = (w - mu + 0.5) / sigma;
    else return 1.0;
    return std::min(1.0, 2.0 * normal_sf(std::abs(z)));
}

// Exact null distribution of the rank sum of the smaller-size sample:
// counts[s] = number of k-subsets of {1..n} with rank sum s.
std::vector<double> rank_sum_counts(std::size_t k, std::size_t n) {
    const std::size_t max_sum = (2 * n - k + 1) * k / 2;
    std::vector<std::vector<double>> ways(k + 1, std::vector<double>(max_sum + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t r = 1; r <= n; ++r)
        for (std::size_t kk = std::min(r, k); kk >= 1; --kk)
            for (std::size_t s = max_sum; s >= r; --s)
                if (ways[kk - 1][s - r] != 0.0) ways[kk][s] += ways[kk - 1][s - r];
    return ways[k];
}

double exact_p(std::size_t n1, std::size_t n2, double rank_sum_a) {
    // Work with the smaller sample; its rank sum is T - W when swapping.
    const std::size_t n = n1 + n2;
    double w = rank_sum_a;
    std::size_t k = n1;
    if (n2 < n1) {
        const double total = static_cast<double>(n * (n + 1)) / 2.0;
        w = total - rank_sum_a;
        k = n2;
    }
    const std::vector<double> counts = rank_sum_counts(k, n);
    double total = 0.0, lo = 0.0, hi = 0.0;
    for (std::size_t s = 0; s < counts.size(); ++s) {
        total += counts[s];
        if (static_cast<double>(s) <= w) lo += counts[s];
        if (static_cast<double>(s) >= w) hi += counts[s];
    }
    return std::min(1.0, 2.0 * std::min(lo, hi) / total);
}

void check_sizes(std::span<const double> a, std::span<const double> b) {
    if (a.size() < 3 || b.size() < 3)
        throw ConfigError("wilcoxon_ranksum: both samples need at least 3 values");
}

} // namespace

double wilcoxon_ranksum_normal(std::span<const double> a, std::span<const double> b) {
    check_sizes(a, b);
    const RankInfo info = pooled_ranks(a, b);
    return normal_p(a.size(), b.size(), info);
}

double wilcoxon_ranksum(std::span<const double> a, std::span<const double> b) {
    check_sizes(a, b);
    const RankInfo info = pooled_ranks(a, b);
    const std::size_t min_n = std::min(a.size(), b.size());
    const std::size_t total = a.size() + b.size();
    // The normal approximation drifts past 0.01 below ~10 values per side, so
    // small tie-free samples take the exact path (the same convention R uses).
    if (!info.has_ties && min_n <= 8 && total <= 200)
        return exact_p(a.size(), b.size(), info.rank_sum_a);
    return normal_p(a.size(), b.size(), info);
}

const ComparisonTable::Row* ComparisonTable::find(const std::string& problem,
                                                  const std::string& algorithm) const {
    for (const Row& r : rows)
        if (r.problem == problem && r.algorithm == algorithm) return &r;
    return nullptr;
}

void ComparisonTable::write_csv(std::ostream& out) const {
    out << "# std = sample standard deviation (n-1 denominator)\n";
    out << "problem,metric";
    for (const std::string& a : algorithms) out << ',' << a;
    out << "\n";
    std::vector<std::string> problems;
    for (const Row& r : rows)
        if (std::find(problems.begin(), problems.end(), r.problem) == problems.end())
            problems.push_back(r.problem);
    static constexpr const char* kMetrics[] = {"best", "std", "mean"};
    for (const std::string& p : problems) {
        for (const char* metric : kMetrics) {
            out << p << ',' << metric;
            for (const std::string& a : algorithms) {
                const Row* r = find(p, a);
                out << ',';
                if (r == nullptr) continue;
                const double v = metric == std::string("best") ? r->stats.best
                                 : metric == std::string("std") ? r->stats.stddev
                                                                : r->stats.mean;
                out << format_double(v);
            }
            out << "\n";
        }
    }
}

void ComparisonTable::write_pvalues_csv(std::ostream& out) const {
    out << "problem,algorithm,p_value\n";
    for (const PairwiseP& p : p_values)
        out << p.problem << ',' << p.algorithm << ',' << format_double(p.p) << "\n";
}

std::string ComparisonTable::to_json() const {
    nlohmann::json j;
    j["algorithms"] = algorithms;
    j["std_definition"] = "sample standard deviation (n-1 denominator)";
    nlohmann::json summary = nlohmann::json::object();
    for (const Row& r : rows) {
        nlohmann::json cell;
        cell["best"] = r.stats.best;
        cell["std"] = r.stats.stddev;
        cell["mean"] = r.stats.mean;
        if (r.infeasible_runs > 0) cell["infeasible_runs"] = r.infeasible_runs;
        summary[r.problem][r.algorithm] = std::move(cell);
    }
    j["summary"] = std::move(summary);
    nlohmann::json pvals = nlohmann::json::object();
    for (const PairwiseP& p : p_values) pvals[p.problem][p.algorithm] = p.p;
    j["p_values"] = std::move(pvals);
    return j.dump(2);
}

} // namespace cgo::stats
