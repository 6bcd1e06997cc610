#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "hypercov/design.hpp"
#include "hypercov/samplers.hpp"
#include "hypercov/stats.hpp"

namespace hypercov {

/// What a simulation measures.
class SimTarget {
public:
    enum class Type { FullTuple, Projected, SubBlockEdge };

    static SimTarget full();
    /// Projection onto t dimensions; `dims` (1-based, size t) defaults to 1..t.
    static SimTarget projected(std::uint32_t t, std::vector<std::uint32_t> dims = {});
    /// (i,j)-edges in E_{(p_i,p_j)}.
    static SimTarget sub_block_edge(EdgeProjection e, std::uint32_t coarse_i, std::uint32_t coarse_j);

    /// Parses full | proj:t | proj:t:d1,d2,... | edge:i,j,pi,pj.
    static SimTarget parse(std::string_view text);
    /// Inverse of parse.
    std::string label() const;

    Type type() const noexcept { return type_; }
    std::uint32_t t() const noexcept { return t_; }
    const std::vector<std::uint32_t>& dims() const noexcept { return dims_; }
    const EdgeProjection& edge() const noexcept { return edge_; }
    std::uint32_t coarse_i() const noexcept { return coarse_i_; }
    std::uint32_t coarse_j() const noexcept { return coarse_j_; }

    /// Throws InvalidArgument / UnsupportedSpec when the target does not fit the spec.
    void check(const DesignSpec& spec) const;
    /// Number of cells in the target universe; throws Guard beyond 64 bits.
    std::uint64_t universe(const DesignSpec& spec) const;
    /// Single-trial hit rate of one cell: n^{-(d-1)}, n^{-(t-1)} or 1/n.
    double lambda(const DesignSpec& spec) const;

private:
    SimTarget(Type type, std::uint32_t t) : type_(type), t_(t), edge_(1, 2) {}

    Type type_;
    std::uint32_t t_;
    std::vector<std::uint32_t> dims_;
    EdgeProjection edge_;
    std::uint32_t coarse_i_ = 1;
    std::uint32_t coarse_j_ = 1;
};

/// Set of covered cells: a bitmap for small universes, a hash set otherwise.
class CoveredCells {
public:
    explicit CoveredCells(std::uint64_t universe);

    /// True when the key was not yet covered.
    bool insert(std::uint64_t key);
    std::uint64_t size() const noexcept { return size_; }
    std::uint64_t universe() const noexcept { return universe_; }
    void clear();

private:
    static constexpr std::uint64_t kDenseLimit = 1ull << 25;

    std::uint64_t universe_;
    std::uint64_t size_ = 0;
    std::vector<std::uint64_t> bits_;
    std::vector<std::uint32_t> touched_;
    std::unordered_set<std::uint64_t> sparse_;
};

/// Incremental coverage of one target by a growing sequence of trials.
class CoverageTracker {
public:
    CoverageTracker(const DesignSpec& spec, SimTarget target);

    /// Inserts the trial's cells; returns the number of newly covered cells.
    std::uint64_t add(const Trial& trial);
    std::uint64_t covered() const noexcept { return cells_.size(); }
    std::uint64_t universe() const noexcept { return cells_.universe(); }
    double fraction() const noexcept {
        return static_cast<double>(cells_.size()) / static_cast<double>(cells_.universe());
    }
    bool complete() const noexcept { return cells_.size() == cells_.universe(); }
    void reset() { cells_.clear(); }

private:
    DesignSpec spec_;
    SimTarget target_;
    std::vector<std::uint32_t> dims0_;  // 0-based projected dims
    std::uint64_t band_width_ = 0;
    CoveredCells cells_;
};

struct SimLimits {
    std::uint64_t max_tracked_cells = 100'000'000;  // k * n per replicate
};

struct SimPlan {
    DesignSpec spec;
    SamplerKind kind = SamplerKind::LHS;
    std::uint64_t k = 1;
    std::uint64_t reps = 1000;
    std::vector<SimTarget> targets{SimTarget::full()};
    std::uint64_t seed = 0;
    unsigned workers = 1;
    /// Also compute the exact multiset expectation when it is cheap enough.
    bool exact_reference = true;

    void validate(const SimLimits& limits = {}) const;
};

/// Seed of replicate r: derive_seed(plan seed, r). Trial t of that replicate
/// then uses derive_seed(replicate seed, t).
std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t replicate) noexcept;

struct CoverageReport {
    SimTarget target = SimTarget::full();
    std::vector<double> fractions;  // by replicate index
    Summary summary;
    double lambda = 0;
    double ref_iid = 0;   // 1 - (1 - lambda)^k
    double ref_asym = 0;  // 1 - exp(-k lambda)
    std::optional<double> ref_multiset;
};

/// Runs reps replicates of k i.i.d. trials each; one report per target, in
/// plan order. Output is independent of the worker count.
std::vector<CoverageReport> simulate_coverage(const SimPlan& plan, const SimLimits& limits = {});

/// Per-coarse-cell point counts of the (i,j) projection over the p^2 coarse
/// cells, with a uniformity chi-square and the population variance of counts.
struct UniformityMetric {
    std::vector<std::uint64_t> counts;  // index (q_i - 1) * p + (q_j - 1)
    double mean = 0;
    double variance = 0;
    ChiSquare chi_square;
};

UniformityMetric subblock_uniformity(std::span<const Trial> trials, const EdgeProjection& e);

}  // namespace hypercov
