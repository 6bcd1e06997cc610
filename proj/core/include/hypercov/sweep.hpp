#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "hypercov/design.hpp"
#include "hypercov/samplers.hpp"

namespace hypercov {

enum class SweepMode { ClosedForm, Simulated };

std::string_view to_string(SweepMode mode) noexcept;
/// closed_form | simulated
SweepMode parse_sweep_mode(std::string_view text);

/// Exact check of 1 - (1 - n^{-(t-1)})^k >= level (big-integer comparison when
/// the powers stay below a few million bits, long double otherwise).
bool closed_form_reaches(std::uint32_t n, std::uint32_t t, std::uint64_t k, double level);

/// Smallest k with 1 - (1 - n^{-(t-1)})^k >= level. Starts from
/// ceil(log(1-level) / log(1-n^{-(t-1)})) and verifies at k*-1 and k*.
/// Throws InvalidMode for level >= 1 (the closed form never reaches 1).
std::uint64_t find_k_closed_form(std::uint32_t n, std::uint32_t t, double level);

struct SimSearch {
    DesignSpec spec;
    SamplerKind kind = SamplerKind::LHS;
    std::uint32_t t = 2;
    std::uint64_t reps = 200;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    std::uint64_t k_max = 1ull << 24;
};

/// Smallest k whose mean projected coverage over reps reaches level.
/// Replicates grow nested trial prefixes; the horizon doubles until the
/// level is reached, then the first crossing is located by bisection on the
/// (monotone) mean curve. Level 1 defers to mean_full_coverage_k.
double find_k_simulated(const SimSearch& search, double level);

/// Mean number of trials until every one of the n^t projected cells is
/// covered (coupon-collector stopping rule, per replicate).
double mean_full_coverage_k(const SimSearch& search);

/// Dispatch used by the sweep: level 1 is only valid in simulated mode.
double find_k_for_target(const SimSearch& search, double level, SweepMode mode);

struct SweepRow {
    std::uint32_t n = 0;
    double k_star = 0;
};

struct SlopeFit {
    double slope = 0;
    double intercept = 0;
    double residual = 0;  // Euclidean norm of the residuals
};

/// Ordinary least squares of log10 k* on log10 n. Needs >= 3 rows.
SlopeFit fit_slope(std::span<const SweepRow> rows);

struct SweepConfig {
    std::uint32_t d = 5;
    std::uint32_t t = 2;
    SamplerKind kind = SamplerKind::LHS;
    std::vector<double> levels{0.25, 0.5, 0.75};
    std::vector<std::uint32_t> n_grid{64, 128, 256, 512};
    SweepMode mode = SweepMode::ClosedForm;
    std::uint64_t reps = 200;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct SweepResult {
    double level = 0;
    std::uint32_t t = 0;
    std::uint32_t d = 0;
    std::vector<SweepRow> rows;  // sorted by n
    SlopeFit fit;
    bool fitted = false;  // false when fewer than 3 rows
};

/// Spec for level count n in dimension d; for OS, n must be a perfect d-th power.
DesignSpec sweep_spec(std::uint32_t d, std::uint32_t n, SamplerKind kind);

/// One result per level, in the order given. Each (level, n) cell is seeded
/// with derive_seed(seed, level_index * grid_size + n_index).
std::vector<SweepResult> run_sweep(const SweepConfig& config);

}  // namespace hypercov
