#pragma once

#include <cstdint>
#include <span>

namespace hypercov {

/// Two-sided 99% standard normal quantile.
inline constexpr double kZ99 = 2.5758293035489004;

struct Summary {
    std::size_t count = 0;
    double mean = 0;
    double sd = 0;  // n-1 denominator; 0 for a single value
    double se = 0;  // sd / sqrt(count)
    double ci_low = 0;   // mean -/+ z99 * se
    double ci_high = 0;
    double min = 0;
    double max = 0;
};

/// Throws InvalidArgument on empty input.
Summary summarize(std::span<const double> values);

struct ChiSquare {
    double statistic = 0;
    std::uint64_t dof = 0;
    double p_value = 1;
};

/// Pearson goodness-of-fit against equal expected counts.
ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts);

/// Upper-tail probability of the chi-square distribution.
double chi_square_sf(double statistic, std::uint64_t dof);

}  // namespace hypercov
