#include <gtest/gtest.h>

#include <cmath>

#include "hypercov/error.hpp"
#include "hypercov/mc_sim.hpp"

using namespace hypercov;

TEST(SimTarget, ParseAndLabel) {
    EXPECT_EQ(SimTarget::parse("full").type(), SimTarget::Type::FullTuple);
    const auto p = SimTarget::parse("proj:2:1,3");
    EXPECT_EQ(p.type(), SimTarget::Type::Projected);
    EXPECT_EQ(p.t(), 2u);
    EXPECT_EQ(p.dims(), (std::vector<std::uint32_t>{1, 3}));
    EXPECT_EQ(p.label(), "proj:2:1,3");
    const auto e = SimTarget::parse("edge:1,2,2,1");
    EXPECT_EQ(e.type(), SimTarget::Type::SubBlockEdge);
    EXPECT_EQ(e.label(), "edge:1,2,2,1");
    EXPECT_THROW(SimTarget::parse("proj:1"), Error);
    EXPECT_THROW(SimTarget::parse("bogus"), Error);
    EXPECT_THROW(SimTarget::parse("proj:4").check(DesignSpec::latin(3, 4)), Error);
    EXPECT_THROW(SimTarget::parse("edge:1,2,1,1").check(DesignSpec::latin(3, 4)), Error);
}

TEST(CoveredCells, DenseAndSparse) {
    CoveredCells dense(100);
    EXPECT_TRUE(dense.insert(5));
    EXPECT_FALSE(dense.insert(5));
    EXPECT_EQ(dense.size(), 1u);
    dense.clear();
    EXPECT_EQ(dense.size(), 0u);
    CoveredCells sparse(1ull << 40);
    EXPECT_TRUE(sparse.insert(1ull << 39));
    EXPECT_FALSE(sparse.insert(1ull << 39));
    EXPECT_EQ(sparse.size(), 1u);
}

TEST(Tracker, OneTrialAddsNCells) {
    const auto spec = DesignSpec::latin(4, 9);
    CoverageTracker full(spec, SimTarget::full());
    EXPECT_EQ(full.add(gen_lh_trial({spec, 3})), 9u);
    CoverageTracker proj(spec, SimTarget::projected(2));
    EXPECT_EQ(proj.add(gen_lh_trial({spec, 3})), 9u);
}

TEST(Simulate, TinySpecSingleTrialCoversHalf) {
    SimPlan plan{DesignSpec::latin(2, 2)};
    plan.k = 1;
    plan.reps = 50;
    const auto r = simulate_coverage(plan).front();
    for (double f : r.fractions) EXPECT_DOUBLE_EQ(f, 0.5);
    ASSERT_TRUE(r.ref_multiset.has_value());
    EXPECT_DOUBLE_EQ(*r.ref_multiset, 0.5);
}

TEST(Simulate, OrthogonalSubBlockEdgeIsExact) {
    SimPlan plan{DesignSpec::orthogonal(3, 2)};
    plan.kind = SamplerKind::OS;
    plan.k = 1;
    plan.reps = 100;
    plan.targets = {SimTarget::parse("edge:1,2,1,1"), SimTarget::parse("edge:2,3,2,1"),
                    SimTarget::parse("edge:1,3,2,2")};
    for (const auto& r : simulate_coverage(plan)) {
        // p^{d-2} = 2 points land in every coarse pair; E has p^{2d-2} = 16 cells.
        for (double f : r.fractions) EXPECT_DOUBLE_EQ(f, 2.0 / 16.0);
        EXPECT_DOUBLE_EQ(r.lambda, 0.125);
    }
}

TEST(Simulate, FullProjectionEqualsFullTarget) {
    SimPlan plan{DesignSpec::latin(3, 6)};
    plan.k = 7;
    plan.reps = 40;
    plan.seed = 5;
    plan.targets = {SimTarget::full(), SimTarget::projected(3)};
    const auto r = simulate_coverage(plan);
    EXPECT_EQ(r[0].fractions, r[1].fractions);
}

TEST(Simulate, WorkerCountDoesNotChangeResults) {
    SimPlan plan{DesignSpec::latin(3, 10)};
    plan.k = 12;
    plan.reps = 64;
    plan.seed = 99;
    plan.targets = {SimTarget::full(), SimTarget::projected(2)};
    plan.workers = 1;
    const auto a = simulate_coverage(plan);
    plan.workers = 4;
    const auto b = simulate_coverage(plan);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].fractions, b[i].fractions);
}

TEST(Simulate, AgreesWithIidLaw) {
    for (auto kind : {SamplerKind::LHS, SamplerKind::OS}) {
        SimPlan plan{DesignSpec::orthogonal(2, 4)};
        plan.kind = kind;
        plan.k = 16;
        plan.reps = 500;
        plan.seed = 17;
        const auto r = simulate_coverage(plan).front();
        EXPECT_NEAR(r.summary.mean, r.ref_iid, 4 * r.summary.se);
        EXPECT_NEAR(r.ref_iid, 1 - std::pow(1 - 1.0 / 16, 16), 1e-12);
    }
}

TEST(Simulate, PlanValidation) {
    SimPlan plan{DesignSpec::latin(2, 4)};
    plan.reps = 0;
    EXPECT_THROW(plan.validate(), Error);
    plan.reps = 1;
    plan.kind = SamplerKind::OS;
    EXPECT_THROW(plan.validate(), Error);
}

TEST(Uniformity, LatinTrialExample) {
    const auto spec = DesignSpec::orthogonal(2, 2);
    const std::vector<Trial> trials{Trial(spec, std::vector<std::uint32_t>{1, 2, 2, 1, 3, 4, 4, 3})};
    const auto m = subblock_uniformity(trials, EdgeProjection(1, 2));
    EXPECT_EQ(m.counts, (std::vector<std::uint64_t>{2, 0, 0, 2}));
    EXPECT_DOUBLE_EQ(m.mean, 1.0);
    EXPECT_DOUBLE_EQ(m.variance, 1.0);
}

TEST(Uniformity, OrthogonalBeatsLatin) {
    const auto spec = DesignSpec::orthogonal(3, 2);
    double lhs_sum = 0;
    double os_sum = 0;
    for (std::uint64_t rep = 0; rep < 1000; ++rep) {
        const std::vector<Trial> lh{gen_lh_trial({spec, rep})};
        const std::vector<Trial> os{gen_os_trial({spec, rep, SamplerKind::OS})};
        const auto os_metric = subblock_uniformity(os, EdgeProjection(1, 2));
        EXPECT_EQ(os_metric.variance, 0.0);
        os_sum += os_metric.chi_square.statistic;
        lhs_sum += subblock_uniformity(lh, EdgeProjection(1, 2)).chi_square.statistic;
    }
    EXPECT_EQ(os_sum, 0.0);
    EXPECT_LT(os_sum, lhs_sum);
}
