#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "cgo/rng.hpp"
#include "cgo/stats.hpp"
#include "support/oracles.hpp"

using namespace cgo;
using namespace cgo::stats;

TEST_CASE("summarize computes min, sample std, mean") {
    const std::vector<double> v = {1.0, 2.0, 3.0};
    const SummaryStats s = summarize(v);
    CHECK(s.best == 1.0);
    CHECK(s.mean == 2.0);
    CHECK(s.stddev == doctest::Approx(1.0));

    const std::vector<double> single = {7.0};
    const SummaryStats s1 = summarize(single);
    CHECK(s1.best == 7.0);
    CHECK(s1.mean == 7.0);
    CHECK(s1.stddev == 0.0);

    const std::vector<double> equal = {4.0, 4.0, 4.0, 4.0};
    CHECK(summarize(equal).stddev == 0.0);
}

TEST_CASE("run sets validate distinct seeds") {
    RunSet rs;
    rs.algorithm = "cgo";
    rs.problem = "sphere";
    rs.final_bests = {1.0, 2.0};
    rs.seeds = {1, 1};
    CHECK_THROWS_AS(rs.validate(), ConfigError);
    rs.seeds = {1, 2};
    CHECK_NOTHROW(rs.validate());
    rs.final_bests = {};
    rs.seeds = {};
    CHECK_THROWS_AS(rs.validate(), ConfigError);
}

TEST_CASE("wilcoxon rank-sum on the fully separated example") {
    const std::vector<double> a = {1, 2, 3, 4, 5};
    const std::vector<double> b = {10, 11, 12, 13, 14};
    // exact one-sided tail is 1/C(10,5); two-sided doubles it
    const double exact = 2.0 / 252.0;
    CHECK(wilcoxon_ranksum(a, b) == doctest::Approx(exact).epsilon(1e-12));
    CHECK(oracle::wilcoxon_exact(a, b) == doctest::Approx(exact).epsilon(1e-12));
    // the normal approximation stays within the documented 0.01 band here
    CHECK(std::abs(wilcoxon_ranksum_normal(a, b) - exact) < 0.01);
}

TEST_CASE("identical samples give p = 1") {
    const std::vector<double> a = {3.0, 3.0, 3.0, 3.0};
    CHECK(wilcoxon_ranksum(a, a) == 1.0);
    const std::vector<double> b = {1.0, 2.0, 3.0};
    CHECK(wilcoxon_ranksum(b, b) == 1.0);
}

TEST_CASE("size precondition") {
    const std::vector<double> two = {1.0, 2.0};
    const std::vector<double> three = {1.0, 2.0, 3.0};
    CHECK_THROWS_AS(wilcoxon_ranksum(two, three), ConfigError);
    CHECK_THROWS_AS(wilcoxon_ranksum(three, two), ConfigError);
}

TEST_CASE("two-sided symmetry is exact") {
    RngStream rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(3, 12));
        const std::size_t m = static_cast<std::size_t>(rng.uniform_int(3, 12));
        std::vector<double> a(n), b(m);
        for (double& v : a) v = rng.uniform(-10, 10);
        for (double& v : b) v = rng.uniform(-10, 10);
        CHECK(wilcoxon_ranksum(a, b) == wilcoxon_ranksum(b, a));
        CHECK(wilcoxon_ranksum_normal(a, b) == wilcoxon_ranksum_normal(b, a));
    }
}

TEST_CASE("shift invariance is exact") {
    RngStream rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<double> a(6), b(8);
        for (double& v : a) v = rng.uniform(-10, 10);
        for (double& v : b) v = rng.uniform(-10, 10);
        const double p0 = wilcoxon_ranksum(a, b);
        const double shift = rng.uniform(-5, 5);
        for (double& v : a) v += shift;
        for (double& v : b) v += shift;
        CHECK(wilcoxon_ranksum(a, b) == p0);
    }
}

TEST_CASE("production p-values agree with the enumeration oracle for small samples") {
    RngStream rng(23);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(3, 8));
        const std::size_t m = static_cast<std::size_t>(rng.uniform_int(3, 20));
        std::vector<double> a(n), b(m);
        for (double& v : a) v = rng.uniform(-10, 10);
        for (double& v : b) v = rng.uniform(-8, 12);
        const double p = wilcoxon_ranksum(a, b);
        const double px = oracle::wilcoxon_exact(a, b);
        CHECK(p == doctest::Approx(px).epsilon(1e-12));
    }
}

TEST_CASE("moving one sample away never increases the exact p") {
    RngStream rng(24);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rng.uniform_int(3, 8));
        std::vector<double> a(n), b(n);
        for (double& v : a) v = rng.uniform(0.0, 1.0);
        double prev_oracle = 2.0, prev_prod = 2.0;
        for (double delta : {0.01, 0.2, 0.5, 1.0, 2.0, 5.0}) {
            for (std::size_t i = 0; i < n; ++i) b[i] = a[i] + delta;
            const double po = oracle::wilcoxon_exact(a, b);
            const double pp = wilcoxon_ranksum(a, b);
            CHECK(po <= prev_oracle + 1e-15);
            CHECK(pp <= prev_prod + 1e-15);
            prev_oracle = po;
            prev_prod = pp;
        }
    }
}

TEST_CASE("normal approximation quality for moderate sizes") {
    // Below ~10 per side the staircase of the exact distribution exceeds a
    // 0.01 band, which is exactly why production switches to enumeration.
    RngStream rng(25);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<double> a(20), b(25);
        for (double& v : a) v = rng.uniform(-10, 10);
        for (double& v : b) v = rng.uniform(-9, 11);
        worst = std::max(worst,
                         std::abs(wilcoxon_ranksum_normal(a, b) - wilcoxon_ranksum(a, b)));
    }
    CHECK(worst < 0.01);
}

TEST_CASE("comparison table emitters") {
    ComparisonTable table;
    table.algorithms = {"cgo", "pso"};
    table.rows.push_back({"sphere", "cgo", {1e-8, 1e-9, 2e-8}, 0});
    table.rows.push_back({"sphere", "pso", {1e-4, 1e-5, 2e-4}, 0});
    table.p_values.push_back({"sphere", "pso", 0.003});

    std::ostringstream csv;
    table.write_csv(csv);
    const std::string body = csv.str();
    CHECK(body.find("problem,metric,cgo,pso") != std::string::npos);
    CHECK(body.find("sphere,best,") != std::string::npos);
    CHECK(body.find("sphere,std,") != std::string::npos);
    CHECK(body.find("sphere,mean,") != std::string::npos);
    CHECK(body.find("n-1") != std::string::npos);

    std::ostringstream pcsv;
    table.write_pvalues_csv(pcsv);
    CHECK(pcsv.str().find("sphere,pso,0.003") != std::string::npos);

    const auto j = nlohmann::json::parse(table.to_json());
    CHECK(j["summary"]["sphere"]["cgo"]["best"].get<double>() == 1e-8);
    CHECK(j["p_values"]["sphere"]["pso"].get<double>() == 0.003);
}
