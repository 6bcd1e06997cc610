#include <gtest/gtest.h>

#include <map>
#include <set>

#include "hypercov/error.hpp"
#include "hypercov/exact_count.hpp"
#include "hypercov/oracle.hpp"
#include "hypercov/rng.hpp"
#include "hypercov/samplers.hpp"
#include "hypercov/stats.hpp"

using namespace hypercov;

TEST(Rng, DeterministicAndSeedSensitive) {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        EXPECT_EQ(x, b.next());
        (void)c.next();
    }
    EXPECT_NE(Rng(42).next(), Rng(43).next());
    EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
    EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
}

TEST(Rng, BelowStaysInRangeAndIsUniform) {
    Rng rng(9);
    std::vector<std::uint64_t> counts(7, 0);
    for (int i = 0; i < 70'000; ++i) {
        const auto v = rng.below(7);
        ASSERT_LT(v, 7u);
        ++counts[v];
    }
    EXPECT_GT(chi_square_uniform(counts).p_value, 0.001);
}

TEST(Rng, ShuffleIsPermutation) {
    Rng rng(5);
    std::vector<int> v{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
    rng.shuffle(std::span<int>(v));
    std::set<int> s(v.begin(), v.end());
    EXPECT_EQ(s.size(), 10u);
}

TEST(LhSampler, TinySpecGivesOneOfTwoTrials) {
    const auto spec = DesignSpec::latin(2, 2);
    const Trial diag(spec, std::vector<std::uint32_t>{1, 1, 2, 2});
    const Trial anti(spec, std::vector<std::uint32_t>{1, 2, 2, 1});
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto t = gen_lh_trial({spec, seed, SamplerKind::LHS});
        EXPECT_TRUE(t == diag || t == anti);
    }
}

TEST(LhSampler, OutputIsLatin) {
    const auto spec = DesignSpec::latin(3, 8);
    for (std::uint64_t seed = 0; seed < 100; ++seed) EXPECT_TRUE(is_latin(gen_lh_trial({spec, seed})));
}

TEST(LhSampler, UniformOverTwoTrials) {
    const auto spec = DesignSpec::latin(2, 2);
    const Trial diag(spec, std::vector<std::uint32_t>{1, 1, 2, 2});
    std::uint64_t hits = 0;
    const std::uint64_t seeds = 10'000;
    for (std::uint64_t seed = 0; seed < seeds; ++seed)
        if (gen_lh_trial({spec, seed}) == diag) ++hits;
    EXPECT_NEAR(static_cast<double>(hits) / seeds, 0.5, 0.02);
}

TEST(LhSampler, UniformOverAllTrialsChiSquare) {
    const auto spec = DesignSpec::latin(3, 3);
    const auto all = enumerate_trials(spec, SamplerKind::LHS);
    ASSERT_EQ(all.trials.size(), 36u);
    std::map<std::vector<std::uint32_t>, std::size_t> index;
    for (std::size_t i = 0; i < all.trials.size(); ++i) {
        const auto c = all.trials[i].canonical();
        index[{c.values().begin(), c.values().end()}] = i;
    }
    std::vector<std::uint64_t> counts(all.trials.size(), 0);
    Sampler sampler({spec, 11, SamplerKind::LHS});
    for (int i = 0; i < 36'000; ++i) {
        const auto c = sampler.next().canonical();
        ++counts.at(index.at({c.values().begin(), c.values().end()}));
    }
    EXPECT_GT(chi_square_uniform(counts).p_value, 0.001);
}

TEST(OsSampler, OutputIsOrthogonalAndLatin) {
    for (auto [d, p] : {std::pair{2u, 2u}, {3u, 2u}, {2u, 3u}, {3u, 3u}}) {
        const auto spec = DesignSpec::orthogonal(d, p);
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            const auto t = gen_os_trial({spec, seed, SamplerKind::OS});
            EXPECT_TRUE(is_latin(t));
            EXPECT_TRUE(is_orthogonal(t));
        }
    }
}

TEST(OsSampler, RequiresBands) {
    EXPECT_THROW(gen_os_trial({DesignSpec::latin(2, 4), 1, SamplerKind::OS}), Error);
}

TEST(OsSampler, ReachesExactlySixteenTrialsUniformly) {
    const auto spec = DesignSpec::orthogonal(2, 2);
    std::map<std::vector<std::uint32_t>, std::uint64_t> counts;
    const std::uint64_t seeds = 32'000;
    for (std::uint64_t seed = 0; seed < seeds; ++seed) {
        const auto c = gen_os_trial({spec, seed, SamplerKind::OS}).canonical();
        ++counts[{c.values().begin(), c.values().end()}];
    }
    ASSERT_EQ(counts.size(), 16u);
    std::vector<std::uint64_t> v;
    const double expected = seeds / 16.0;
    const double sigma = std::sqrt(seeds * (1.0 / 16) * (15.0 / 16));
    for (const auto& [trial, n] : counts) {
        v.push_back(n);
        EXPECT_NEAR(static_cast<double>(n), expected, 3.5 * sigma);
    }
    EXPECT_GT(chi_square_uniform(v).p_value, 0.001);
}

TEST(OsSampler, EnumerationMatchesFilteredLatinTrials) {
    const auto spec = DesignSpec::orthogonal(2, 2);
    const auto lh = enumerate_trials(spec, SamplerKind::LHS);
    std::vector<Trial> filtered;
    for (const auto& t : lh.trials)
        if (is_orthogonal(t)) filtered.push_back(t.canonical());
    const auto os = enumerate_trials(spec, SamplerKind::OS);
    ASSERT_EQ(filtered.size(), os.trials.size());
    for (const auto& t : os.trials) EXPECT_NE(std::find(filtered.begin(), filtered.end(), t), filtered.end());
}

TEST(Sampler, IndexedStreamMatchesDirectCalls) {
    const SamplerConfig cfg{DesignSpec::latin(3, 5), 77, SamplerKind::LHS};
    Sampler s(cfg);
    const auto batch = s.take(4);
    for (std::uint64_t i = 0; i < 4; ++i) EXPECT_EQ(batch[i].values().size(), 15u);
    for (std::uint64_t i = 0; i < 4; ++i)
        EXPECT_TRUE(std::equal(batch[i].values().begin(), batch[i].values().end(),
                               gen_trial(cfg, i).values().begin()));
    EXPECT_EQ(s.index(), 4u);
}

TEST(Sampler, ParseKind) {
    EXPECT_EQ(parse_sampler_kind("lhs"), SamplerKind::LHS);
    EXPECT_EQ(parse_sampler_kind("os"), SamplerKind::OS);
    EXPECT_THROW(parse_sampler_kind("xyz"), Error);
}
