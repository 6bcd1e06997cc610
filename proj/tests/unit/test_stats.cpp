#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "hypercov/error.hpp"
#include "hypercov/stats.hpp"

using namespace hypercov;

TEST(Summary, Constant) {
    const std::vector<double> v{0.5, 0.5, 0.5};
    const auto s = summarize(v);
    EXPECT_DOUBLE_EQ(s.mean, 0.5);
    EXPECT_DOUBLE_EQ(s.sd, 0.0);
}

TEST(Summary, TwoPoints) {
    const std::vector<double> v{0.0, 1.0};
    const auto s = summarize(v);
    EXPECT_DOUBLE_EQ(s.mean, 0.5);
    EXPECT_NEAR(s.sd, std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(s.se, 0.5, 1e-12);
    EXPECT_EQ(s.min, 0.0);
    EXPECT_EQ(s.max, 1.0);
}

TEST(Summary, SingleAndEmpty) {
    const std::vector<double> one{3.0};
    EXPECT_EQ(summarize(one).sd, 0.0);
    EXPECT_THROW(summarize(std::span<const double>{}), Error);
}

TEST(Summary, ConfidenceIntervalCalibration) {
    std::mt19937_64 gen(2024);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    int covered = 0;
    for (int meta = 0; meta < 1000; ++meta) {
        std::vector<double> v(1000);
        for (auto& x : v) x = u(gen);
        const auto s = summarize(v);
        if (s.ci_low <= 0.5 && 0.5 <= s.ci_high) ++covered;
    }
    EXPECT_GE(covered, 985);
}

TEST(ChiSquare, Survival) {
    EXPECT_NEAR(chi_square_sf(3.841458820694124, 1), 0.05, 1e-9);
    EXPECT_NEAR(chi_square_sf(0.0, 3), 1.0, 1e-12);
    const std::vector<std::uint64_t> flat{10, 10, 10, 10};
    const auto c = chi_square_uniform(flat);
    EXPECT_EQ(c.statistic, 0.0);
    EXPECT_EQ(c.dof, 3u);
    EXPECT_NEAR(c.p_value, 1.0, 1e-12);
    const std::vector<std::uint64_t> skew{40, 0, 0, 0};
    EXPECT_LT(chi_square_uniform(skew).p_value, 1e-10);
}
