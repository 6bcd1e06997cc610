#pragma once

#include <cstdint>
#include <vector>

#include "hypercov/design.hpp"
#include "hypercov/rational.hpp"
#include "hypercov/samplers.hpp"

namespace hypercov {

/// Hard guards: exceeding any of them is an error, never a truncation.
struct OracleLimits {
    std::uint64_t max_trials = 100'000;
    std::uint64_t max_multisets = 10'000'000;
    std::uint64_t max_universe = 1ull << 24;
};

/// Every distinct trial of a tiny spec, in canonical (row-sorted) form,
/// ordered lexicographically.
struct EnumeratedTrialSet {
    DesignSpec spec;
    SamplerKind kind;
    std::vector<Trial> trials;
};

EnumeratedTrialSet enumerate_trials(const DesignSpec& spec, SamplerKind kind, const OracleLimits& limits = {});

/// Which cells of a trial are counted.
class OracleProjection {
public:
    enum class Mode { Tuples, Edges, SubBlockEdges };

    /// Full d-tuples; universe n^d.
    static OracleProjection tuples() { return OracleProjection(Mode::Tuples); }
    /// (i,j)-edges over all pairs i < j; universe C(d,2) n^2.
    static OracleProjection edges() { return OracleProjection(Mode::Edges); }
    /// (i,j)-edges in E_{(p_i,p_j)}; universe (p^{d-1})^2.
    static OracleProjection sub_block_edges(EdgeProjection e, std::uint32_t coarse_i, std::uint32_t coarse_j);

    Mode mode() const noexcept { return mode_; }
    std::uint64_t universe(const DesignSpec& spec) const;
    /// Sorted, distinct cell keys of the trial in [0, universe).
    std::vector<std::uint64_t> keys(const Trial& trial) const;

private:
    explicit OracleProjection(Mode mode) : mode_(mode), edge_(1, 2) {}

    Mode mode_;
    EdgeProjection edge_;
    std::uint32_t coarse_i_ = 1;
    std::uint32_t coarse_j_ = 1;
};

/// Mean over all m-multisets (nondecreasing index sequences) of the number of
/// cells common to every member.
ExactRational oracle_expected_intersection(const EnumeratedTrialSet& set, std::uint64_t m,
                                           const OracleProjection& projection = OracleProjection::tuples(),
                                           const OracleLimits& limits = {});

/// Mean over all k-multisets of |union of members| / universe.
ExactRational oracle_expected_coverage(const EnumeratedTrialSet& set, std::uint64_t k,
                                       const OracleProjection& projection = OracleProjection::tuples(),
                                       const OracleLimits& limits = {});

/// Number of trials containing each cell, indexed by cell key.
std::vector<std::uint64_t> oracle_occurrence_counts(const EnumeratedTrialSet& set,
                                                    const OracleProjection& projection = OracleProjection::tuples(),
                                                    const OracleLimits& limits = {});

}  // namespace hypercov
