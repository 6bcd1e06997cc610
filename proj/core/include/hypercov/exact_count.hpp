#pragma once

#include <cstdint>
#include <string_view>

#include "hypercov/design.hpp"
#include "hypercov/rational.hpp"

namespace hypercov {

/// Which intersection count a formula describes.
enum class IntersectionKind {
    LhsTuple,        // d-tuples shared by LH trials
    OsTuple,         // d-tuples shared by orthogonal trials (n = p^d)
    LhEdgeAll,       // (i,j)-edges over all pairs i < j, LH trials
    LhEdgeSubBlock,  // (i,j)-edges inside one E_{(p_i,p_j)}, LH trials, n = p^d
};

std::string_view to_string(IntersectionKind kind) noexcept;
/// Accepts lhs | os | edge | edge-subblock.
IntersectionKind parse_intersection_kind(std::string_view text);

/// x_m = scale * prod_{i<m} (a+i)/(b+i); `universe` is the number of cells
/// the coverage fraction is taken over.
struct KindParams {
    BigInt a;
    BigInt b;
    BigInt scale;
    BigInt universe;
};

struct ExactLimits {
    std::uint64_t max_terms = 512;        // cap on m and on k
    std::uint64_t max_bits = 1'000'000;   // refuse ceil(d n log2 n) above this
};

/// Throws Guard when ceil(d * n * log2 n) exceeds limits.max_bits.
void check_bigint_budget(const DesignSpec& spec, const ExactLimits& limits = {});

/// n!^{d-1}.
BigInt count_lh_trials(std::uint32_t d, std::uint64_t n);
BigInt count_lh_trials(const DesignSpec& spec);

/// (p^{d-1})!^{dp}; p = 1 is allowed here (a single-point space).
BigInt count_os_trials(std::uint32_t d, std::uint64_t p);
/// Throws UnsupportedSpec when the spec has no p.
BigInt count_os_trials(const DesignSpec& spec);

/// Trials containing a fixed d-tuple: (n-1)!^{d-1} for LhsTuple,
/// p^{d(d-1)(p-1)} (p^{d-1}-1)!^{dp} for OsTuple.
BigInt count_trials_containing_tuple(const DesignSpec& spec, IntersectionKind kind);

/// LH trials containing a fixed (i,j)-edge: (n-1)! n!^{d-2}.
BigInt count_trials_containing_edge(const DesignSpec& spec);

/// (a, b, scale, universe) for the kind. Checks the bigint budget.
KindParams intersection_params(IntersectionKind kind, const DesignSpec& spec, const ExactLimits& limits = {});

/// Single-trial hit rate lambda = a/b, exact.
ExactRational hit_rate(IntersectionKind kind, const DesignSpec& spec, const ExactLimits& limits = {});

/// Expected number of cells common to all members of a uniformly random
/// m-multiset of trials: scale * C(a+m-1, m) / C(b+m-1, m). Requires m >= 1.
ExactRational expected_intersection(IntersectionKind kind, const DesignSpec& spec, std::uint64_t m,
                                    const ExactLimits& limits = {});

/// Expected covered fraction of the kind's universe by the union of a
/// k-multiset, by inclusion-exclusion over x_1..x_k. Requires k >= 1;
/// throws CapExceeded when k > limits.max_terms.
ExactRational expected_coverage_multiset(IntersectionKind kind, const DesignSpec& spec, std::uint64_t k,
                                         const ExactLimits& limits = {});

}  // namespace hypercov
