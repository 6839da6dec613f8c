#include "doctest.h"

#include "nsv/core/rng.hpp"
#include "nsv/shrinkage/shrinkage.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace nsv;

namespace {

// Contours of a likelihood whose log volume is exactly -log L.
Problem exp_shell_problem(std::size_t dim) {
    Problem p;
    p.name = "synthetic";
    p.dim = dim;
    p.log_likelihood = [](std::span<const double>) { return 0.0; };
    p.contour_log_volume = [](double log_l) { return -log_l; };
    return p;
}

std::vector<DeadPoint> dead_sequence(std::initializer_list<double> log_ls) {
    std::vector<DeadPoint> dead;
    std::size_t k = 0;
    for (double l : log_ls) dead.push_back({++k, l, {}, 0});
    return dead;
}

} // namespace

TEST_CASE("shrinkage series on a synthetic contour") {
    const Problem problem = exp_shell_problem(2);
    const auto dead = dead_sequence({0.0, 0.1});
    const auto samples = shrinkage_series(dead, problem);
    REQUIRE(samples.size() == 1);
    CHECK(samples[0].iteration == 2);
    CHECK(samples[0].log_l == 0.1);
    CHECK(samples[0].log_v == doctest::Approx(-0.1).epsilon(1e-12));
    CHECK(samples[0].t == doctest::Approx(0.9048374180359596).epsilon(1e-12));
    CHECK(samples[0].s_border ==
          doctest::Approx(0.048770575499285990).epsilon(1e-12));
}

TEST_CASE("shrinkage series edge cases") {
    const Problem problem = exp_shell_problem(2);

    // a tied pair is kept as a zero border, not dropped
    const auto tied = shrinkage_series(dead_sequence({0.2, 0.2}), problem);
    REQUIRE(tied.size() == 1);
    CHECK(tied[0].t == 1.0);
    CHECK(tied[0].s_border == 0.0);

    CHECK(shrinkage_series(dead_sequence({0.5}), problem).empty());
    CHECK(shrinkage_series({}, problem).empty());

    const auto five = shrinkage_series(
        dead_sequence({0.1, 0.2, 0.3, 0.4, 0.5}), problem);
    CHECK(five.size() == 4);

    CHECK_THROWS_WITH_AS(
        shrinkage_series(dead_sequence({0.3, 0.1}), problem),
        "invalid dead sequence: volume increased", std::invalid_argument);

    Problem no_contour = exp_shell_problem(2);
    no_contour.contour_log_volume = nullptr;
    CHECK_THROWS_WITH_AS(shrinkage_series(dead_sequence({0.0, 0.1}), no_contour),
                         "problem has no analytic contour volume",
                         std::invalid_argument);
}

TEST_CASE("expected border CDF") {
    CHECK(expected_cdf_s(-0.1, 20, 400) == 0.0);
    CHECK(expected_cdf_s(0.0, 20, 400) == 0.0);
    CHECK(expected_cdf_s(1.0, 20, 400) == 1.0);
    CHECK(expected_cdf_s(1.5, 20, 400) == 1.0);

    // d = N = 1 degenerates to the uniform CDF
    CHECK(expected_cdf_s(0.37, 1, 1) == doctest::Approx(0.37).epsilon(1e-12));

    CHECK(expected_cdf_s(1.0 / 8000.0, 20, 400) ==
          doctest::Approx(0.6321435524912300).epsilon(1e-9));
}

TEST_CASE("KS statistic reference values") {
    const auto identity = [](double x) { return x; };
    std::vector<double> three{0.1, 0.5, 0.9};
    CHECK(ks_statistic(three, identity) ==
          doctest::Approx(7.0 / 30.0).epsilon(1e-12));

    std::vector<double> one{0.5};
    CHECK(ks_statistic(one, identity) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("KS statistic is invariant under monotone transforms") {
    RngStream rng(27);
    std::vector<double> x(500), x_sq(500);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform01();
    std::sort(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) x_sq[i] = x[i] * x[i];

    const double d_direct = ks_statistic(x, [](double v) { return v; });
    const double d_mapped =
        ks_statistic(x_sq, [](double v) { return std::sqrt(v); });
    CHECK(d_direct == doctest::Approx(d_mapped).epsilon(1e-12));
}

TEST_CASE("KS p-value behaviour") {
    CHECK(ks_p_value(0.0, 100) == 1.0);
    CHECK(ks_p_value(-1.0, 100) == 1.0);
    CHECK(ks_p_value(1e-9, 10000) == 1.0); // series cap: a perfect fit
    CHECK(ks_p_value(0.5, 10000) < 1e-300);
    CHECK(ks_p_value(0.01, 10000) > ks_p_value(0.02, 10000));
    const double p = ks_p_value(0.0136, 10000); // lambda ~ 1.36: classic 5% point
    CHECK(p == doctest::Approx(0.05).epsilon(0.05));
}

TEST_CASE("KS p-values are roughly uniform under the null") {
    RngStream rng(12);
    const auto identity = [](double x) { return x; };
    int below = 0;
    const int trials = 200;
    for (int trial = 0; trial < trials; ++trial) {
        std::vector<double> samples(2000);
        for (auto& s : samples) s = rng.uniform01();
        if (nsv::testing::ks_uniformity_p(samples, identity) < 0.05) ++below;
    }
    const double fraction = static_cast<double>(below) / trials;
    CHECK(std::fabs(fraction - 0.05) < 0.035);
}

TEST_CASE("analytic shrinkage draws have the right mean") {
    const std::size_t n_live = 400;
    RngStream rng(6);
    double sum = 0.0;
    const std::size_t n = 10000;
    for (std::size_t i = 0; i < n; ++i) {
        sum += std::pow(rng.uniform01(), 1.0 / static_cast<double>(n_live));
    }
    const double mean = sum / static_cast<double>(n);
    const double expected = 400.0 / 401.0;
    const double se = std::sqrt(6.1879271622806484e-6 / static_cast<double>(n));
    CHECK(std::fabs(mean - expected) < 3.0 * se);
}

TEST_CASE("shrinkage_ks accepts exact borders and rejects shifted ones") {
    const std::size_t d = 7, n_live = 100;
    RngStream rng(9);
    std::vector<ShrinkageSample> good, bad;
    for (int i = 0; i < 5000; ++i) {
        const double u = rng.uniform01();
        ShrinkageSample s;
        // inverse of 1 - (1-s)^(dN)
        s.s_border = -std::expm1(std::log1p(-u) /
                                 static_cast<double>(d * n_live));
        good.push_back(s);
        s.s_border = std::min(1.0, 1.5 * s.s_border);
        bad.push_back(s);
    }
    const KSReport ok = shrinkage_ks(good, d, n_live);
    CHECK(ok.n == 5000);
    CHECK(ok.p_value > 0.01);
    const KSReport off = shrinkage_ks(bad, d, n_live);
    CHECK(off.p_value < 1e-10);
}

TEST_CASE("run_shrinkage_test end to end with the rejection sampler") {
    const auto report =
        run_shrinkage_test(SamplerSpec{RejectionSpec{}}, 2, 100, 1000, 1);
    CHECK(report.sampler == "rejection");
    CHECK(report.dim == 2);
    CHECK(report.n_live == 100);
    CHECK(report.n_iterations == 1000);
    CHECK(report.samples.size() == 999);
    CHECK(report.ks.n == 999);
    CHECK(report.efficiency > 0.0);
    CHECK(report.efficiency <= 1.0);
    CHECK(report.n_evaluations >= 1000);
    // an exact sampler should not be flagged
    CHECK(report.ks.p_value > 1e-6);
    for (const auto& s : report.samples) {
        CHECK(s.t <= 1.0);
        CHECK(s.s_border >= 0.0);
        CHECK(s.s_border < 1.0);
    }
}
