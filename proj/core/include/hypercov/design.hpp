#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hypercov {

/// Hard limits on the parameter space.
inline constexpr std::uint32_t kMaxLevels = 1u << 20;
inline constexpr std::uint32_t kMaxDimensions = 16;

/// Integer power with overflow detection; returns nullopt on overflow of 64 bits.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) noexcept;

/// The parameter space [n]^d, optionally with the coarse base p of an
/// orthogonal design (n = p^d exactly).
class DesignSpec {
public:
    DesignSpec(std::uint32_t d, std::uint32_t n, std::optional<std::uint32_t> p = std::nullopt);

    static DesignSpec latin(std::uint32_t d, std::uint32_t n) { return {d, n}; }
    /// Orthogonal spec on n = p^d levels.
    static DesignSpec orthogonal(std::uint32_t d, std::uint32_t p);

    std::uint32_t d() const noexcept { return d_; }
    std::uint32_t n() const noexcept { return n_; }
    std::optional<std::uint32_t> p() const noexcept { return p_; }
    bool supports_orthogonal() const noexcept { return p_.has_value(); }

    /// p, or throws UnsupportedSpec.
    std::uint32_t require_p() const;
    /// Width p^{d-1} of one coarse band; requires p.
    std::uint32_t band_width() const;

    friend bool operator==(const DesignSpec&, const DesignSpec&) = default;

private:
    std::uint32_t d_;
    std::uint32_t n_;
    std::optional<std::uint32_t> p_;
};

/// Value v in [n] split into (coarse band q in [p], fine offset x in [p^{d-1}]),
/// with v = (q-1) p^{d-1} + x.
struct BandValue {
    std::uint32_t coarse;
    std::uint32_t fine;
    friend bool operator==(const BandValue&, const BandValue&) = default;
};

BandValue decode_value(const DesignSpec& spec, std::uint32_t v);
std::uint32_t encode_value(const DesignSpec& spec, BandValue bv);

/// Coarse coordinates (p_1, ..., p_d) naming the sub-block SB_{(p_1,...,p_d)}.
struct SubBlockCoord {
    std::vector<std::uint32_t> coarse;
    friend auto operator<=>(const SubBlockCoord&, const SubBlockCoord&) = default;
};

/// Sub-block containing the point.
SubBlockCoord sub_block_of(const DesignSpec& spec, std::span<const std::uint32_t> point);

/// A pair of dimensions 1 <= i < j <= d selecting (i,j)-edges.
class EdgeProjection {
public:
    EdgeProjection(std::uint32_t i, std::uint32_t j);

    std::uint32_t i() const noexcept { return i_; }
    std::uint32_t j() const noexcept { return j_; }
    /// Throws InvalidArgument unless j <= d.
    void check(const DesignSpec& spec) const;

    friend auto operator<=>(const EdgeProjection&, const EdgeProjection&) = default;

private:
    std::uint32_t i_;
    std::uint32_t j_;
};

/// An n x d matrix with entries in [n]; rows are points. Values are 1-based.
/// The Latin property is not enforced here (see is_latin); shape and range are.
class Trial {
public:
    /// Row-major values, n*d entries.
    Trial(DesignSpec spec, std::vector<std::uint32_t> values);
    /// One inner vector per point.
    Trial(DesignSpec spec, const std::vector<std::vector<std::uint32_t>>& rows);
    /// Build from column vectors (each of length n).
    static Trial from_columns(DesignSpec spec, const std::vector<std::vector<std::uint32_t>>& columns);

    const DesignSpec& spec() const noexcept { return spec_; }
    std::uint32_t rows() const noexcept { return spec_.n(); }
    std::uint32_t cols() const noexcept { return spec_.d(); }

    std::span<const std::uint32_t> point(std::uint32_t row) const {
        return {values_.data() + static_cast<std::size_t>(row) * spec_.d(), spec_.d()};
    }
    /// 1-based row and column, as in the matrix notation.
    std::uint32_t at(std::uint32_t row, std::uint32_t col) const {
        return values_[static_cast<std::size_t>(row - 1) * spec_.d() + (col - 1)];
    }
    std::span<const std::uint32_t> values() const noexcept { return values_; }

    /// Rows sorted lexicographically; equal for any two row orderings of one set.
    Trial canonical() const;

    /// Set equality (row order ignored).
    friend bool operator==(const Trial& a, const Trial& b);

private:
    DesignSpec spec_;
    std::vector<std::uint32_t> values_;
};

/// True iff every column is a permutation of [n].
bool is_latin(const Trial& trial);

/// True iff each of the p^d sub-blocks holds exactly one point.
/// Throws UnsupportedSpec when the spec has no p.
bool is_orthogonal(const Trial& trial);

/// The (i,j)-edges {(a_i, a_j)} of the trial, sorted.
std::vector<std::pair<std::uint32_t, std::uint32_t>> project_edges(const Trial& trial,
                                                                  const EdgeProjection& e);

}  // namespace hypercov
