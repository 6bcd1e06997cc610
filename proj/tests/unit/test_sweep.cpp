#include <gtest/gtest.h>

#include <cmath>

#include "hypercov/error.hpp"
#include "hypercov/sweep.hpp"

using namespace hypercov;

TEST(ClosedFormSearch, KnownThresholds) {
    EXPECT_EQ(find_k_closed_form(100, 2, 0.5), 69u);
    EXPECT_TRUE(closed_form_reaches(100, 2, 69, 0.5));
    EXPECT_FALSE(closed_form_reaches(100, 2, 68, 0.5));
    EXPECT_EQ(find_k_closed_form(16, 3, 0.5), 178u);
    EXPECT_EQ(find_k_closed_form(100, 2, 1e-9), 1u);
}

TEST(ClosedFormSearch, MatchesLogFormula) {
    for (std::uint32_t n : {10u, 37u, 64u, 500u}) {
        for (double level : {0.1, 0.5, 0.9, 0.99}) {
            const double lambda = 1.0 / n;
            const auto expected = static_cast<std::uint64_t>(std::ceil(std::log1p(-level) / std::log1p(-lambda)));
            const auto k = find_k_closed_form(n, 2, level);
            EXPECT_LE(k > expected ? k - expected : expected - k, 1u) << n << ' ' << level;
            EXPECT_TRUE(closed_form_reaches(n, 2, k, level));
            if (k > 1) EXPECT_FALSE(closed_form_reaches(n, 2, k - 1, level));
        }
    }
}

TEST(ClosedFormSearch, FullCoverageIsNotAClosedFormLevel) {
    try {
        find_k_closed_form(64, 2, 1.0);
        FAIL() << "expected an invalid-mode error";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::InvalidMode);
    }
}

TEST(SlopeFit, CollinearRows) {
    const std::vector<SweepRow> rows{{10, 100}, {100, 1000}, {1000, 10000}};
    const auto fit = fit_slope(rows);
    EXPECT_NEAR(fit.slope, 1.0, 1e-12);
    EXPECT_NEAR(fit.intercept, 1.0, 1e-12);
    EXPECT_NEAR(fit.residual, 0.0, 1e-12);
    const std::vector<SweepRow> two{{10, 100}, {100, 1000}};
    EXPECT_THROW(fit_slope(two), Error);
}

TEST(Sweep, ClosedFormSlopes) {
    for (std::uint32_t t : {2u, 3u}) {
        SweepConfig cfg;
        cfg.d = 5;
        cfg.t = t;
        cfg.levels = {0.5};
        const auto result = run_sweep(cfg).front();
        ASSERT_TRUE(result.fitted);
        EXPECT_NEAR(result.fit.slope, t - 1.0, 0.02);
    }
}

TEST(Sweep, OrthogonalGridNeedsPowers) {
    EXPECT_EQ(sweep_spec(3, 27, SamplerKind::OS).p(), 3u);
    EXPECT_THROW(sweep_spec(3, 28, SamplerKind::OS), Error);
}

TEST(Sweep, SimulatedSearchIsNearClosedForm) {
    SimSearch search{DesignSpec::latin(3, 27)};
    search.t = 2;
    search.reps = 100;
    search.seed = 4;
    const double k = find_k_simulated(search, 0.5);
    EXPECT_NEAR(k, static_cast<double>(find_k_closed_form(27, 2, 0.5)), 2.0);
}

TEST(Sweep, FullCoverageStoppingTime) {
    SimSearch search{DesignSpec::latin(2, 4)};
    search.t = 2;
    search.reps = 400;
    search.seed = 8;
    // Coupon collector over 16 cells, 4 new-or-old cells per trial: mean is
    // well above 16 H_16 / 4 ~ 13.5 and finite.
    const double k = mean_full_coverage_k(search);
    EXPECT_GT(k, 10.0);
    EXPECT_LT(k, 40.0);
}
