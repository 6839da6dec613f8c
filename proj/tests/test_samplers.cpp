#include "doctest.h"

#include "nsv/core/distance.hpp"
#include "nsv/core/errors.hpp"
#include "nsv/problems/registry.hpp"
#include "nsv/samplers/mcmc.hpp"
#include "nsv/samplers/region.hpp"
#include "nsv/samplers/rejection.hpp"
#include "nsv/samplers/spec.hpp"
#include "test_helpers.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

using namespace nsv;

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

LiveSet make_live(std::vector<std::vector<double>> coords,
                  std::vector<double> log_ls = {}) {
    std::vector<LivePoint> points;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        const double l = log_ls.empty() ? 0.0 : log_ls[i];
        points.push_back({UnitPoint{std::move(coords[i])}, l});
    }
    return LiveSet(std::move(points));
}

LiveSet random_live(std::size_t n, std::size_t d, RngStream& rng,
                    const Problem* problem = nullptr) {
    std::vector<LivePoint> points;
    for (std::size_t i = 0; i < n; ++i) {
        UnitPoint p = prior_sample(rng, d);
        const double l = problem ? problem->log_likelihood(p.coords) : 0.0;
        points.push_back({std::move(p), l});
    }
    return LiveSet(std::move(points));
}

} // namespace

TEST_CASE("sampler spec parsing and formatting") {
    CHECK(std::holds_alternative<RejectionSpec>(parse_sampler_spec("rejection").kind));
    CHECK(format_sampler_spec(parse_sampler_spec("rejection")) == "rejection");

    const auto mf = parse_sampler_spec("mcmc-fixed-1e-5-200");
    const auto& mf_spec = std::get<McmcSpec>(mf.kind);
    CHECK(mf_spec.steps == 200);
    CHECK(std::get<McmcScaleFixed>(mf_spec.scale).sigma == 1e-5);
    CHECK(format_sampler_spec(mf) == "mcmc-fixed-1e-05-200");

    const auto ma = parse_sampler_spec("mcmc-adapt-50");
    const auto& ma_spec = std::get<McmcSpec>(ma.kind);
    CHECK(ma_spec.steps == 50);
    CHECK(std::holds_alternative<McmcScaleAdaptive>(ma_spec.scale));
    CHECK(format_sampler_spec(ma) == "mcmc-adapt-50");

    const auto rad = parse_sampler_spec("radfriends");
    CHECK(std::get<RegionSpec>(rad.kind).norm == Norm::euclidean);
    CHECK(format_sampler_spec(rad) == "radfriends");
    const auto sup = parse_sampler_spec("supfriends");
    CHECK(std::get<RegionSpec>(sup.kind).norm == Norm::supremum);
    CHECK(format_sampler_spec(sup) == "supfriends");

    for (const char* bad : {"", "slice", "mcmc-adapt-", "mcmc-adapt-0",
                            "mcmc-fixed-200", "mcmc-fixed--1-20",
                            "mcmc-fixed-0-20", "mcmc-fixed-1e-5-"}) {
        CHECK_THROWS_AS(parse_sampler_spec(bad), std::invalid_argument);
    }
}

TEST_CASE("proposal scale adaptation") {
    CHECK(adapt_scale(0.1, 3, 1) ==
          doctest::Approx(0.13956124250860895).epsilon(1e-12));
    CHECK(adapt_scale(0.1, 2, 9) ==
          doctest::Approx(0.08948393168143698).epsilon(1e-12));
    CHECK(adapt_scale(0.1, 4, 4) == 0.1);
}

TEST_CASE("rejection draw") {
    const Problem problem = make_problem("pyramid-2", {});
    RngStream rng(21);
    EvalCounter counter;

    // an open threshold accepts the first prior point
    const LivePoint p = rejection_draw(problem, -inf, rng, counter);
    CHECK(counter.n_evaluations == 1);
    CHECK(p.point.in_unit_cube());
    CHECK(p.log_l == problem.log_likelihood(p.point.coords));

    // the contour at sup radius 0.25 encloses a quarter of the cube
    const double threshold = -std::pow(0.25, 0.01);
    counter = {};
    const std::size_t n_draws = 10000;
    for (std::size_t i = 0; i < n_draws; ++i) {
        const LivePoint q = rejection_draw(problem, threshold, rng, counter);
        CHECK(q.log_l > threshold);
    }
    const double acceptance =
        static_cast<double>(n_draws) / static_cast<double>(counter.n_evaluations);
    CHECK(acceptance == doctest::Approx(0.25).epsilon(0.08));

    // an unreachable threshold exhausts the budget
    CHECK_THROWS_WITH_AS(rejection_draw(problem, 0.0, rng, counter, 1000),
                         "sampler stalled: rejection exceeded the evaluation budget",
                         SamplerStalledError);
}

TEST_CASE("mcmc stuck chain returns its start without spending evaluations") {
    const Problem problem = make_problem("pyramid-2", {});
    const LiveSet live = make_live({{0.3, 0.7}}, {-0.5});
    McmcSpec spec{.steps = 25, .scale = McmcScaleFixed{1e9}};
    RngStream rng(5);
    EvalCounter counter;
    double scale = 1e9;

    const LivePoint out = mcmc_draw(problem, -1.0, live, 1, spec, rng, counter, scale);
    CHECK(counter.n_evaluations == 0);
    CHECK(out.point.coords == live.point(0).coords);
    CHECK(out.log_l == -0.5);
    CHECK(scale == 1e9); // fixed mode never adapts
}

TEST_CASE("mcmc draws stay in the cube and above the threshold") {
    const Problem problem = make_problem("pyramid-2", {});
    RngStream rng(31);
    const LiveSet live = random_live(20, 2, rng, &problem);
    const double threshold = live.log_l(live.argmin_log_l());

    McmcSpec spec{.steps = 20, .scale = McmcScaleFixed{0.1}};
    EvalCounter counter;
    double scale = 0.1;
    for (int i = 0; i < 100; ++i) {
        const LivePoint p =
            mcmc_draw(problem, threshold, live, live.size(), spec, rng, counter, scale);
        CHECK(p.point.in_unit_cube());
        CHECK(p.log_l > threshold);
    }
    CHECK(scale == 0.1);
}

TEST_CASE("adaptive mcmc grows its scale while everything is accepted") {
    const Problem problem = make_problem("pyramid-2", {});
    const LiveSet live = make_live({{0.5, 0.5}}, {0.0});
    McmcSpec spec{.steps = 25, .scale = McmcScaleAdaptive{0.01}};
    McmcSampler sampler(spec);
    CHECK(sampler.scale() == 0.01);

    RngStream rng(8);
    EvalCounter counter;
    sampler.draw(problem, -inf, live, 1, 1, rng, counter);
    const double after_one = sampler.scale();
    CHECK(after_one > 0.01);
    sampler.draw(problem, -inf, live, 1, 2, rng, counter);
    CHECK(sampler.scale() > after_one); // persists and keeps adapting
    CHECK(counter.n_evaluations == 50);
}

TEST_CASE("bootstrap round counts") {
    CHECK(std::fabs(bootstrap_round_count(100, 1e-6) - 39.8685) < 1e-3);
    CHECK(std::fabs(bootstrap_round_count(1000, 1e-6) - 44.8521) < 1e-3);
    CHECK(std::fabs(bootstrap_round_count(10000, 1e-6) - 49.8357) < 1e-3);
    // published reference values
    CHECK(std::fabs(bootstrap_round_count(100, 1e-6) - 39.8) < 0.1);
    CHECK(std::fabs(bootstrap_round_count(1000, 1e-6) - 44.9) < 0.1);
    CHECK(std::fabs(bootstrap_round_count(10000, 1e-6) - 49.8) < 0.1);
}

TEST_CASE("compute_r on constructed live sets") {
    RngStream rng(13);

    // two points: every informative round leaves one out at distance 1
    const LiveSet pair = make_live({{0.0, 0.0}, {1.0, 0.0}});
    CHECK(compute_r(pair, 50, Norm::euclidean, rng) == 1.0);
    CHECK(compute_r(pair, 50, Norm::supremum, rng) == 1.0);

    const LiveSet coincident = make_live({{0.4, 0.4}, {0.4, 0.4}, {0.4, 0.4}});
    CHECK(compute_r(coincident, 50, Norm::euclidean, rng) == 0.0);

    const LiveSet single = make_live({{0.5, 0.5}});
    CHECK(compute_r(single, 50, Norm::euclidean, rng) == 0.0);
}

TEST_CASE("compute_r grows with the round count and bounds nearest neighbours") {
    RngStream setup(99);
    const LiveSet live = random_live(400, 2, setup);

    RngStream rng_a(7), rng_b(7);
    const double r10 = compute_r(live, 10, Norm::euclidean, rng_a);
    const double r50 = compute_r(live, 50, Norm::euclidean, rng_b);
    CHECK(r10 <= r50); // identical seed: the first ten rounds coincide
    CHECK(r50 > 0.0);

    // R must dominate the largest nearest-neighbour distance once every
    // point has been left out at least once
    double max_nn = 0.0;
    for (std::size_t i = 0; i < live.size(); ++i) {
        double best = inf;
        for (std::size_t j = 0; j < live.size(); ++j) {
            if (i == j) continue;
            double sq = 0.0;
            for (std::size_t k = 0; k < 2; ++k) {
                const double diff = live.point(i).coords[k] - live.point(j).coords[k];
                sq += diff * diff;
            }
            best = std::min(best, sq);
        }
        max_nn = std::max(max_nn, std::sqrt(best));
    }
    CHECK(r50 >= max_nn);
}

TEST_CASE("draw_near_v1 acceptance and support") {
    RngStream rng(55);

    // a ball that covers the cube accepts the first trial
    const LiveSet centre = make_live({{0.5, 0.5}});
    std::uint64_t trials = 0;
    const UnitPoint p = draw_near_v1(centre, 1, 10.0, Norm::euclidean, rng, 100, &trials);
    CHECK(trials == 1);
    CHECK(p.in_unit_cube());

    // d = 1, R = 0.1 around the centre: exactly a fifth of the prior
    const LiveSet mid = make_live({{0.5}});
    std::uint64_t total = 0;
    const std::size_t n_draws = 20000;
    for (std::size_t i = 0; i < n_draws; ++i) {
        std::uint64_t t = 0;
        const UnitPoint q = draw_near_v1(mid, 1, 0.1, Norm::euclidean, rng, 1u << 20, &t);
        CHECK(std::fabs(q.coords[0] - 0.5) < 0.1);
        total += t;
    }
    const double acceptance =
        static_cast<double>(n_draws) / static_cast<double>(total);
    CHECK(acceptance == doctest::Approx(0.2).epsilon(0.05));

    CHECK_THROWS_WITH_AS(draw_near_v1(mid, 1, 1e-9, Norm::euclidean, rng, 100),
                         "sampler stalled: draw_near global rejection exceeded its budget",
                         SamplerStalledError);
}

TEST_CASE("draw_near_v1 keeps candidates near the live set") {
    RngStream setup(1);
    const LiveSet live = random_live(20, 2, setup);
    RngStream rng(2);
    for (int i = 0; i < 1000; ++i) {
        const UnitPoint p =
            draw_near_v1(live, live.size(), 0.15, Norm::euclidean, rng, 1u << 20);
        CHECK(min_dist(p.coords, live, Norm::euclidean) < 0.15);
    }
    for (int i = 0; i < 1000; ++i) {
        const UnitPoint p =
            draw_near_v1(live, live.size(), 0.15, Norm::supremum, rng, 1u << 20);
        CHECK(min_dist(p.coords, live, Norm::supremum) < 0.15);
    }
}

TEST_CASE("draw_near_v2 around an interior point is uniform in the ball") {
    const LiveSet centre = make_live({{0.5, 0.5}});
    const double r = 0.2;

    for (Norm norm : {Norm::euclidean, Norm::supremum}) {
        RngStream rng(64);
        double sum = 0.0;
        const std::size_t n_draws = 100000;
        for (std::size_t i = 0; i < n_draws; ++i) {
            const UnitPoint p = draw_near_v2(centre, 1, r, norm, rng, 1u << 20);
            const double dx = p.coords[0] - 0.5;
            const double dy = p.coords[1] - 0.5;
            const double dist = norm == Norm::euclidean
                                    ? std::sqrt(dx * dx + dy * dy)
                                    : std::max(std::fabs(dx), std::fabs(dy));
            CHECK(dist < r);
            sum += dist;
        }
        // both norms give E[dist] = 2R/3 in two dimensions
        const double mean = sum / static_cast<double>(n_draws);
        CHECK(mean == doctest::Approx(2.0 * r / 3.0).epsilon(0.01));
    }
}

TEST_CASE("draw_near_v2 matches draw_near_v1 in distribution") {
    for (auto [seed, norm] : {std::pair<std::uint64_t, Norm>{101, Norm::euclidean},
                              {202, Norm::euclidean},
                              {303, Norm::supremum}}) {
        RngStream setup(seed);
        const LiveSet live = random_live(50, 2, setup);
        const double r = 0.15;
        const std::size_t n = 30000;

        RngStream rng1(seed + 1), rng2(seed + 2);
        std::vector<double> x1, y1, x2, y2;
        for (std::size_t i = 0; i < n; ++i) {
            const UnitPoint a = draw_near_v1(live, 50, r, norm, rng1, 1u << 20);
            x1.push_back(a.coords[0]);
            y1.push_back(a.coords[1]);
            const UnitPoint b = draw_near_v2(live, 50, r, norm, rng2, 1u << 20);
            x2.push_back(b.coords[0]);
            y2.push_back(b.coords[1]);
        }
        // six comparisons under an exact null; a real mismatch drives p to
        // ~0, so gate loosely rather than eat a ~6% family false-fail rate
        CHECK(nsv::testing::ks_two_sample_p(x1, x2) > 0.001);
        CHECK(nsv::testing::ks_two_sample_p(y1, y2) > 0.001);
    }
}

TEST_CASE("pairwise cache tracks swaps and replacements exactly") {
    for (Norm norm : {Norm::euclidean, Norm::supremum}) {
        RngStream rng(40);
        const std::size_t n = 20, d = 3;
        LiveSet live = random_live(n, d, rng);

        PairwiseCache cache(norm, n);
        cache.build(live, n);

        for (int op = 0; op < 60; ++op) {
            if (rng.uniform01() < 0.5) {
                const std::size_t i = rng.uniform_below(n);
                const std::size_t j = rng.uniform_below(n);
                live.swap_points(i, j);
                cache.swap_points(i, j);
            } else {
                const std::size_t i = rng.uniform_below(n);
                live.replace(i, {prior_sample(rng, d), 0.0});
                cache.update_point(i, live);
            }
        }

        PairwiseCache fresh(norm, n);
        fresh.build(live, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(cache.row(i)[j] == fresh.row(i)[j]);
            }
        }
    }
}

TEST_CASE("region sampler draws above the threshold and near the live set") {
    const Problem problem = make_problem("pyramid-2", {});
    RngStream setup(3);
    const LiveSet live = random_live(30, 2, setup, &problem);
    const double threshold = live.log_l(live.argmin_log_l());

    RegionSpec spec; // radfriends defaults
    RegionSampler sampler(spec, default_stall_budget);
    RngStream rng(4);
    EvalCounter counter;
    for (std::size_t it = 1; it <= 50; ++it) {
        const LivePoint p =
            sampler.draw(problem, threshold, live, live.size(), it, rng, counter);
        CHECK(p.log_l > threshold);
        CHECK(min_dist(p.point.coords, live, Norm::euclidean) < sampler.state().radius_r);
    }
    CHECK(sampler.state().radius_r > 0.0);
    CHECK(counter.n_evaluations >= 50);
}

TEST_CASE("automatic draw variant falls back to neighbourhood sampling") {
    // a tightly clustered live set makes whole-cube rejection hopeless
    const LiveSet live = make_live(
        {{0.5, 0.5}, {0.5005, 0.5}, {0.5, 0.5005}}, {1.0, 1.0, 1.0});
    Problem flat;
    flat.name = "flat";
    flat.dim = 2;
    flat.log_likelihood = [](std::span<const double>) { return 2.0; };

    RegionSpec auto_spec{.draw_variant = DrawVariant::automatic,
                         .update_interval = 1000};
    RegionSpec near_spec{.draw_variant = DrawVariant::near_point,
                         .update_interval = 1000};
    RegionSampler auto_sampler(auto_spec, 100'000'000);
    RegionSampler near_sampler(near_spec, 100'000'000);
    EvalCounter counter;

    {
        RngStream rng_a(9), rng_b(9);
        auto_sampler.draw(flat, -inf, live, 3, 1, rng_a, counter);
        near_sampler.draw(flat, -inf, live, 3, 1, rng_b, counter);
    }
    // after the switch both samplers consume the stream identically
    RngStream rng_a(77), rng_b(77);
    const LivePoint a = auto_sampler.draw(flat, -inf, live, 3, 2, rng_a, counter);
    const LivePoint b = near_sampler.draw(flat, -inf, live, 3, 2, rng_b, counter);
    CHECK(a.point.coords == b.point.coords);
}
