#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include <nlohmann/json.hpp>

#include "test_util.hpp"
#include "unint/closedforms.hpp"
#include "unint/errors.hpp"
#include "unint/montecarlo.hpp"

using namespace unint;
using testutil::partition;

TEST_CASE("samples are unitary to near machine precision") {
    std::mt19937_64 rng(99);
    for (int n : {1, 3, 5}) {
        for (int trial = 0; trial < 30; ++trial) {
            Eigen::MatrixXcd u = sample_haar(n, rng);
            double residual =
                (u * u.adjoint() - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
            CHECK(residual <= 1e-12);
        }
    }
}

TEST_CASE("dimension one gives a pure phase") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXcd u = sample_haar(1, rng);
        CHECK(std::abs(std::abs(u(0, 0)) - 1.0) <= 1e-14);
    }
}

TEST_CASE("identical seed and parameters give identical reports") {
    IntegralSpec spec = IntegralSpec::parse_text("conj: 1,1; plain: 1,1");
    McReport a = mc_estimate(spec, 3, 6000, 12345);
    McReport b = mc_estimate(spec, 3, 6000, 12345);
    CHECK(a.estimate == b.estimate);
    CHECK(a.stderr_total == b.stderr_total);
    CHECK(a.z_score == b.z_score);
    McReport c = mc_estimate(spec, 3, 6000, 54321);
    CHECK(a.estimate != c.estimate);
}

TEST_CASE("worker count does not change the result") {
    IntegralSpec spec = IntegralSpec::parse_text("conj: 1,2; plain: 1,2");
    auto one = mc_stats({spec}, 3, 150000, 777, 1);
    auto two = mc_stats({spec}, 3, 150000, 777, 2);
    CHECK(one[0].mean == two[0].mean);
    CHECK(one[0].stderr_total == two[0].stderr_total);
}

TEST_CASE("first moments |U_ij|^2 land on 1/n at n = 3") {
    std::vector<IntegralSpec> specs;
    for (long i = 1; i <= 3; ++i)
        for (long j = 1; j <= 3; ++j) {
            IntegralSpec spec;
            spec.conj.push_back({i, j, 1});
            spec.plain.push_back({i, j, 1});
            specs.push_back(spec);
        }
    auto stats = mc_stats(specs, 3, 40000, 2024);
    for (const auto& st : stats) {
        CHECK(std::abs(st.mean.real() - 1.0 / 3.0) <= 5 * st.stderr_real);
        CHECK(std::abs(st.mean.imag()) <= 5 * st.stderr_imag);
    }
}

TEST_CASE("the p=2 exchange integral checks out at n = 2") {
    IntegralSpec spec = IntegralSpec::parse_text("conj: 1,1; 2,2; plain: 1,2; 2,1");
    McReport report = mc_estimate(spec, 2, 60000, 4242);
    REQUIRE(report.symbolic.has_value());
    CHECK(*report.symbolic == Rational(-1, 6));
    CHECK(report.z_score <= 5.0);
    CHECK(report.z_imag <= 5.0);
    CHECK(report.ok);
}

TEST_CASE("a deliberately wrong symbolic value is flagged") {
    IntegralSpec spec = IntegralSpec::parse_text("conj: 1,1; plain: 1,1");
    auto stats = mc_stats({spec}, 3, 40000, 11);
    McReport honest = finalize_report(spec, 3, stats[0], Rational(1, 3), "", 5.0);
    CHECK(honest.ok);
    McReport rigged = finalize_report(spec, 3, stats[0], Rational(1, 2), "", 5.0);
    CHECK_FALSE(rigged.ok);
    CHECK(rigged.z_score > 5.0);
}

TEST_CASE("vanishing integrals estimate zero") {
    IntegralSpec spec = IntegralSpec::parse_text("plain: 1,1");
    McReport report = mc_estimate(spec, 3, 30000, 5);
    REQUIRE(report.symbolic.has_value());
    CHECK(*report.symbolic == 0);
    CHECK(report.ok);
}

TEST_CASE("index labels beyond n are rejected") {
    IntegralSpec spec = IntegralSpec::parse_text("conj: 7,1; plain: 7,1");
    CHECK_THROWS_AS(mc_estimate(spec, 3, 1000, 1), IndexOutOfRange);
}

TEST_CASE("poles of the symbolic value propagate") {
    IntegralSpec spec = spec_for_primitive(partition({3}));
    CHECK_THROWS_AS(mc_estimate(spec, 2, 1000, 1), PoleAtValue);
}

TEST_CASE("estimates agree for globally relabeled indices") {
    IntegralSpec original = IntegralSpec::parse_text("conj: 1,1; 2,2; plain: 1,2; 2,1");
    IntegralSpec relabeled = IntegralSpec::parse_text("conj: 3,2; 1,3; plain: 3,3; 1,2");
    auto stats = mc_stats({original, relabeled}, 3, 60000, 909);
    double gap = std::abs(stats[0].mean - stats[1].mean);
    double err = std::hypot(stats[0].stderr_total, stats[1].stderr_total);
    CHECK(gap <= 5 * err);
    CHECK(evaluate_gtm(original) == evaluate_gtm(relabeled));
}

TEST_CASE("suite reports aggregate per item errors without aborting") {
    std::vector<IntegralSpec> specs{IntegralSpec::parse_text("conj: 1,1; plain: 1,1"),
                                    spec_for_primitive(partition({3}))};  // pole at n=2
    auto reports = check_suite(specs, {2}, 20000, 77);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].ok);
    CHECK_FALSE(reports[1].ok);
    CHECK(reports[1].note.find("n = 2") != std::string::npos);
    auto j = reports[0].to_json();
    CHECK(j["n"] == 2);
    CHECK(j["ok"] == true);
    CHECK(j["symbolic_value"] == "1/2");
}
