#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "hypercov/design.hpp"

namespace hypercov {

enum class SamplerKind { LHS, OS };

std::string_view to_string(SamplerKind kind) noexcept;
/// "lhs" or "os"; throws InvalidArgument otherwise.
SamplerKind parse_sampler_kind(std::string_view text);

struct SamplerConfig {
    DesignSpec spec;
    std::uint64_t seed = 0;
    SamplerKind kind = SamplerKind::LHS;
};

/// Random LH d-trial. Column 1 is the identity 1..n and columns 2..d are
/// independent Fisher-Yates shuffles of [n]; as a point set this is uniform
/// over all n!^{d-1} LH d-trials. Trial `index` of a sample draws from
/// Rng(derive_seed(seed, index)).
Trial gen_lh_trial(const SamplerConfig& cfg, std::uint64_t index = 0);

/// Random orthogonal d-trial on n = p^d levels.
///
/// For every dimension i and coarse band j (i outer, j inner) a permutation
/// f_ij of [p^{d-1}] is drawn by Fisher-Yates. Coarse tuples (p_1,...,p_d) are
/// visited in lexicographic order; each takes, in dimension i, the next unused
/// entry x of f_{i,p_i} and the value (p_i-1) p^{d-1} + x. Distinct
/// permutation choices give distinct trials, so the result is uniform over
/// the (p^{d-1})!^{dp} orthogonal trials.
Trial gen_os_trial(const SamplerConfig& cfg, std::uint64_t index = 0);

/// Dispatches on cfg.kind.
Trial gen_trial(const SamplerConfig& cfg, std::uint64_t index = 0);

/// Sequential trial source for one sample; single owner.
class Sampler {
public:
    explicit Sampler(SamplerConfig cfg);

    Trial next();
    std::vector<Trial> take(std::size_t k);
    std::uint64_t index() const noexcept { return index_; }

private:
    SamplerConfig cfg_;
    std::uint64_t index_ = 0;
};

}  // namespace hypercov
