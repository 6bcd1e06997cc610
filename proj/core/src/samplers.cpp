#include "hypercov/samplers.hpp"

#include <numeric>
#include <string>

#include "hypercov/error.hpp"
#include "hypercov/rng.hpp"

namespace hypercov {

std::string_view to_string(SamplerKind kind) noexcept {
    return kind == SamplerKind::LHS ? "lhs" : "os";
}

SamplerKind parse_sampler_kind(std::string_view text) {
    if (text == "lhs") return SamplerKind::LHS;
    if (text == "os") return SamplerKind::OS;
    fail(ErrorKind::InvalidArgument, "unknown sampler kind '" + std::string(text) + "' (expected lhs|os)");
}

Trial gen_lh_trial(const SamplerConfig& cfg, std::uint64_t index) {
    const DesignSpec& spec = cfg.spec;
    const std::uint32_t n = spec.n(), d = spec.d();
    Rng rng(derive_seed(cfg.seed, index));

    std::vector<std::uint32_t> values(static_cast<std::size_t>(n) * d);
    std::vector<std::uint32_t> column(n);
    for (std::uint32_t c = 0; c < d; ++c) {
        std::iota(column.begin(), column.end(), 1u);
        if (c > 0) rng.shuffle(std::span<std::uint32_t>(column));
        for (std::uint32_t r = 0; r < n; ++r) values[static_cast<std::size_t>(r) * d + c] = column[r];
    }
    return Trial(spec, std::move(values));
}

Trial gen_os_trial(const SamplerConfig& cfg, std::uint64_t index) {
    const DesignSpec& spec = cfg.spec;
    const std::uint32_t p = spec.require_p();
    const std::uint32_t d = spec.d(), n = spec.n();
    const std::uint32_t width = spec.band_width();
    Rng rng(derive_seed(cfg.seed, index));

    // perms[i * p + j] is f_{i,j+1}; cursor tracks the next unused slot.
    std::vector<std::vector<std::uint32_t>> perms(static_cast<std::size_t>(d) * p);
    for (auto& f : perms) {
        f.resize(width);
        std::iota(f.begin(), f.end(), 1u);
        rng.shuffle(std::span<std::uint32_t>(f));
    }
    std::vector<std::uint32_t> cursor(perms.size(), 0);

    std::vector<std::uint32_t> values(static_cast<std::size_t>(n) * d);
    std::vector<std::uint32_t> coarse(d, 0);  // 0-based lexicographic counter
    for (std::uint32_t row = 0; row < n; ++row) {
        for (std::uint32_t i = 0; i < d; ++i) {
            const std::size_t slot = static_cast<std::size_t>(i) * p + coarse[i];
            values[static_cast<std::size_t>(row) * d + i] = coarse[i] * width + perms[slot][cursor[slot]++];
        }
        for (std::uint32_t i = d; i-- > 0;) {
            if (++coarse[i] < p) break;
            coarse[i] = 0;
        }
    }
    return Trial(spec, std::move(values));
}

Trial gen_trial(const SamplerConfig& cfg, std::uint64_t index) {
    return cfg.kind == SamplerKind::LHS ? gen_lh_trial(cfg, index) : gen_os_trial(cfg, index);
}

Sampler::Sampler(SamplerConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.kind == SamplerKind::OS) cfg_.spec.require_p();
}

Trial Sampler::next() { return gen_trial(cfg_, index_++); }

std::vector<Trial> Sampler::take(std::size_t k) {
    std::vector<Trial> out;
    out.reserve(k);
    for (std::size_t t = 0; t < k; ++t) out.push_back(next());
    return out;
}

}  // namespace hypercov
