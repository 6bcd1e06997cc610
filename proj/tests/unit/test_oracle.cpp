#include <gtest/gtest.h>

#include "hypercov/error.hpp"
#include "hypercov/exact_count.hpp"
#include "hypercov/oracle.hpp"
#include "hypercov/verify.hpp"

using namespace hypercov;

namespace {

ExactRational q(long num, long den) { return {BigInt(num), BigInt(den)}; }

}  // namespace

TEST(Enumerate, Sizes) {
    EXPECT_EQ(enumerate_trials(DesignSpec::latin(2, 3), SamplerKind::LHS).trials.size(), 6u);
    EXPECT_EQ(enumerate_trials(DesignSpec::latin(2, 2), SamplerKind::LHS).trials.size(), 2u);
    EXPECT_EQ(enumerate_trials(DesignSpec::orthogonal(2, 2), SamplerKind::OS).trials.size(), 16u);
    EXPECT_EQ(enumerate_trials(DesignSpec::latin(3, 3), SamplerKind::LHS).trials.size(), 36u);
}

TEST(Enumerate, AllDistinctAndValid) {
    const auto set = enumerate_trials(DesignSpec::orthogonal(2, 2), SamplerKind::OS);
    for (std::size_t i = 0; i < set.trials.size(); ++i) {
        EXPECT_TRUE(is_orthogonal(set.trials[i]));
        for (std::size_t j = i + 1; j < set.trials.size(); ++j) EXPECT_FALSE(set.trials[i] == set.trials[j]);
    }
}

TEST(Enumerate, RefusesLargeSpaces) {
    try {
        enumerate_trials(DesignSpec::latin(3, 8), SamplerKind::LHS);
        FAIL() << "expected guard";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Guard);
    }
}

TEST(Oracle, IntersectionByHand) {
    const auto lh22 = enumerate_trials(DesignSpec::latin(2, 2), SamplerKind::LHS);
    EXPECT_EQ(oracle_expected_intersection(lh22, 1), ExactRational(2));
    EXPECT_EQ(oracle_expected_intersection(lh22, 2), q(4, 3));
    const auto lh23 = enumerate_trials(DesignSpec::latin(2, 3), SamplerKind::LHS);
    EXPECT_EQ(oracle_expected_intersection(lh23, 2), q(9, 7));
    const auto os22 = enumerate_trials(DesignSpec::orthogonal(2, 2), SamplerKind::OS);
    EXPECT_EQ(oracle_expected_intersection(os22, 2), q(20, 17));
}

TEST(Oracle, CoverageByHand) {
    const auto lh22 = enumerate_trials(DesignSpec::latin(2, 2), SamplerKind::LHS);
    EXPECT_EQ(oracle_expected_coverage(lh22, 1), q(1, 2));
    EXPECT_EQ(oracle_expected_coverage(lh22, 2), q(2, 3));
    const auto os22 = enumerate_trials(DesignSpec::orthogonal(2, 2), SamplerKind::OS);
    EXPECT_EQ(oracle_expected_coverage(os22, 2), q(29, 68));
}

TEST(Oracle, AgreesWithFormulas) {
    struct Case {
        DesignSpec spec;
        SamplerKind sampler;
        IntersectionKind kind;
        std::uint64_t max_m;
    };
    const std::vector<Case> cases{
        {DesignSpec::latin(2, 2), SamplerKind::LHS, IntersectionKind::LhsTuple, 3},
        {DesignSpec::latin(2, 3), SamplerKind::LHS, IntersectionKind::LhsTuple, 2},
        {DesignSpec::latin(3, 2), SamplerKind::LHS, IntersectionKind::LhsTuple, 2},
        {DesignSpec::orthogonal(2, 2), SamplerKind::OS, IntersectionKind::OsTuple, 2},
    };
    for (const auto& c : cases) {
        const auto set = enumerate_trials(c.spec, c.sampler);
        for (std::uint64_t m = 1; m <= c.max_m; ++m) {
            EXPECT_EQ(oracle_expected_intersection(set, m), expected_intersection(c.kind, c.spec, m));
            EXPECT_EQ(oracle_expected_coverage(set, m), expected_coverage_multiset(c.kind, c.spec, m));
        }
    }
}

TEST(Oracle, EdgeCountsAndCoverage) {
    const auto spec = DesignSpec::latin(3, 2);
    const auto set = enumerate_trials(spec, SamplerKind::LHS);
    for (auto c : oracle_occurrence_counts(set, OracleProjection::edges())) EXPECT_EQ(c, 2u);
    for (std::uint64_t k = 1; k <= 3; ++k)
        EXPECT_EQ(oracle_expected_coverage(set, k, OracleProjection::edges()),
                  expected_coverage_multiset(IntersectionKind::LhEdgeAll, spec, k));
}

TEST(Oracle, CellOccurrences) {
    const auto os = enumerate_trials(DesignSpec::orthogonal(2, 2), SamplerKind::OS);
    const auto os_counts = oracle_occurrence_counts(os);
    EXPECT_EQ(os_counts.size(), 16u);
    for (auto c : os_counts) EXPECT_EQ(c, 4u);
    const auto lh = enumerate_trials(DesignSpec::latin(2, 3), SamplerKind::LHS);
    const auto lh_counts = oracle_occurrence_counts(lh);
    EXPECT_EQ(lh_counts.size(), 9u);
    for (auto c : lh_counts) EXPECT_EQ(c, 2u);
}

TEST(Oracle, SubBlockEdges) {
    const auto spec = DesignSpec::orthogonal(2, 2);
    const auto set = enumerate_trials(spec, SamplerKind::LHS);
    for (std::uint32_t ci = 1; ci <= 2; ++ci) {
        for (std::uint32_t cj = 1; cj <= 2; ++cj) {
            const auto proj = OracleProjection::sub_block_edges(EdgeProjection(1, 2), ci, cj);
            EXPECT_EQ(proj.universe(spec), 4u);
            for (std::uint64_t k = 1; k <= 2; ++k)
                EXPECT_EQ(oracle_expected_coverage(set, k, proj),
                          expected_coverage_multiset(IntersectionKind::LhEdgeSubBlock, spec, k));
        }
    }
}

TEST(VerifySuite, AllMatch) {
    const auto checks = run_verify_suite();
    EXPECT_GE(checks.size(), 40u);
    for (const auto& c : checks)
        EXPECT_TRUE(c.match) << c.check << ' ' << c.kind << " d=" << c.d << " n=" << c.n << ' ' << c.oracle
                             << " vs " << c.exact;
}
