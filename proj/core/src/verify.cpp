#include "hypercov/verify.hpp"

#include <algorithm>

#include "hypercov/exact_count.hpp"
#include "hypercov/oracle.hpp"

namespace hypercov {

namespace {

VerifyCheck make(std::string check, IntersectionKind kind, const DesignSpec& spec, std::uint64_t param,
                 std::string oracle, std::string exact) {
    VerifyCheck c{std::move(check), std::string(to_string(kind)), spec.d(), spec.n(), spec.p(), param,
                  std::move(oracle), std::move(exact), false};
    c.match = c.oracle == c.exact;
    return c;
}

// Uniform occurrence count, or "min..max" when cells disagree.
std::string occurrence_value(const std::vector<std::uint64_t>& counts) {
    auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
    if (*lo == *hi) return std::to_string(*lo);
    return std::to_string(*lo) + ".." + std::to_string(*hi);
}

struct Case {
    IntersectionKind kind;
    DesignSpec spec;
    std::uint64_t max_m;
    std::uint64_t max_k;
};

}  // namespace

std::vector<VerifyCheck> run_verify_suite() {
    std::vector<VerifyCheck> out;
    const auto sub_edge = OracleProjection::sub_block_edges(EdgeProjection(1, 2), 1, 2);

    const std::vector<Case> cases{
        {IntersectionKind::LhsTuple, DesignSpec::latin(2, 2), 3, 3},
        {IntersectionKind::LhsTuple, DesignSpec::latin(2, 3), 3, 3},
        {IntersectionKind::LhsTuple, DesignSpec::latin(3, 2), 3, 3},
        {IntersectionKind::OsTuple, DesignSpec::orthogonal(2, 2), 3, 2},
        {IntersectionKind::LhEdgeAll, DesignSpec::latin(3, 2), 3, 3},
        {IntersectionKind::LhEdgeAll, DesignSpec::latin(2, 3), 2, 2},
        {IntersectionKind::LhEdgeSubBlock, DesignSpec::orthogonal(2, 2), 2, 2},
    };

    for (const auto& c : cases) {
        const SamplerKind sampler = c.kind == IntersectionKind::OsTuple ? SamplerKind::OS : SamplerKind::LHS;
        const auto set = enumerate_trials(c.spec, sampler);
        const OracleProjection projection = c.kind == IntersectionKind::LhEdgeAll        ? OracleProjection::edges()
                                            : c.kind == IntersectionKind::LhEdgeSubBlock ? sub_edge
                                                                                         : OracleProjection::tuples();

        const BigInt formula_count = sampler == SamplerKind::OS ? count_os_trials(c.spec) : count_lh_trials(c.spec);
        out.push_back(make("count", c.kind, c.spec, 0, std::to_string(set.trials.size()), formula_count.get_str()));

        const auto occurrences = oracle_occurrence_counts(set, projection);
        const BigInt per_cell = c.kind == IntersectionKind::LhsTuple || c.kind == IntersectionKind::OsTuple
                                    ? count_trials_containing_tuple(c.spec, c.kind)
                                    : count_trials_containing_edge(c.spec);
        out.push_back(make("occurrence", c.kind, c.spec, 0, occurrence_value(occurrences), per_cell.get_str()));

        for (std::uint64_t m = 1; m <= c.max_m; ++m)
            out.push_back(make("intersect", c.kind, c.spec, m, oracle_expected_intersection(set, m, projection).str(),
                               expected_intersection(c.kind, c.spec, m).str()));
        for (std::uint64_t k = 1; k <= c.max_k; ++k)
            out.push_back(make("cover", c.kind, c.spec, k, oracle_expected_coverage(set, k, projection).str(),
                               expected_coverage_multiset(c.kind, c.spec, k).str()));
    }

    // lambda = a/b against 1/n^{d-1} (tuples) and 1/n (sub-block edges).
    for (std::uint32_t p : {2u, 3u}) {
        for (std::uint32_t d : {2u, 3u}) {
            const DesignSpec spec = DesignSpec::orthogonal(d, p);
            const ExactRational expected(1, pow(BigInt(spec.n()), d - 1));
            for (auto kind : {IntersectionKind::LhsTuple, IntersectionKind::OsTuple})
                out.push_back(make("lambda", kind, spec, 0, expected.str(), hit_rate(kind, spec).str()));
        }
        for (std::uint32_t d : {2u, 3u, 4u}) {
            const DesignSpec spec = DesignSpec::orthogonal(d, p);
            const ExactRational expected(1, BigInt(spec.n()));
            out.push_back(make("lambda", IntersectionKind::LhEdgeSubBlock, spec, 0, expected.str(),
                               hit_rate(IntersectionKind::LhEdgeSubBlock, spec).str()));
        }
    }
    return out;
}

}  // namespace hypercov
