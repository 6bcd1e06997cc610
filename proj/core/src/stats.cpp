#include "hypercov/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/chi_squared.hpp>

#include "hypercov/error.hpp"

namespace hypercov {

Summary summarize(std::span<const double> values) {
    if (values.empty()) fail(ErrorKind::InvalidArgument, "summarize needs at least one value");
    Summary s;
    s.count = values.size();
    // Two-pass for a stable variance.
    double sum = 0;
    for (double v : values) sum += v;
    s.mean = sum / static_cast<double>(s.count);
    double ss = 0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.sd = s.count > 1 ? std::sqrt(ss / static_cast<double>(s.count - 1)) : 0.0;
    s.se = s.sd / std::sqrt(static_cast<double>(s.count));
    s.ci_low = s.mean - kZ99 * s.se;
    s.ci_high = s.mean + kZ99 * s.se;
    auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;
    return s;
}

double chi_square_sf(double statistic, std::uint64_t dof) {
    if (dof == 0) return 1.0;
    boost::math::chi_squared dist(static_cast<double>(dof));
    return boost::math::cdf(boost::math::complement(dist, std::max(statistic, 0.0)));
}

ChiSquare chi_square_uniform(std::span<const std::uint64_t> counts) {
    if (counts.empty()) fail(ErrorKind::InvalidArgument, "chi-square needs at least one cell");
    double total = 0;
    for (auto c : counts) total += static_cast<double>(c);
    if (total == 0) fail(ErrorKind::InvalidArgument, "chi-square needs a nonzero total");
    const double expected = total / static_cast<double>(counts.size());
    ChiSquare out;
    for (auto c : counts) {
        const double diff = static_cast<double>(c) - expected;
        out.statistic += diff * diff / expected;
    }
    out.dof = counts.size() - 1;
    out.p_value = chi_square_sf(out.statistic, out.dof);
    return out;
}

}  // namespace hypercov
