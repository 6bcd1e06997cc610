#include "hypercov/exact_count.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hypercov/error.hpp"

namespace hypercov {

std::string_view to_string(IntersectionKind kind) noexcept {
    switch (kind) {
        case IntersectionKind::LhsTuple: return "lhs";
        case IntersectionKind::OsTuple: return "os";
        case IntersectionKind::LhEdgeAll: return "edge";
        case IntersectionKind::LhEdgeSubBlock: return "edge-subblock";
    }
    return "unknown";
}

IntersectionKind parse_intersection_kind(std::string_view text) {
    if (text == "lhs") return IntersectionKind::LhsTuple;
    if (text == "os") return IntersectionKind::OsTuple;
    if (text == "edge") return IntersectionKind::LhEdgeAll;
    if (text == "edge-subblock") return IntersectionKind::LhEdgeSubBlock;
    fail(ErrorKind::InvalidArgument,
         "unknown kind '" + std::string(text) + "' (expected lhs|os|edge|edge-subblock)");
}

namespace {

// n!^{d-1} and (p^{d-1})!^{dp} both stay below d n log2 n bits.
void check_raw_budget(std::uint32_t d, std::uint64_t n, const ExactLimits& limits = {}) {
    const double nn = static_cast<double>(n);
    const double bits = n < 2 ? 0.0 : std::ceil(d * nn * std::log2(nn));
    if (bits > static_cast<double>(limits.max_bits))
        fail(ErrorKind::Guard, "bigint budget exceeded: ceil(d*n*log2 n) = " +
                                   std::to_string(static_cast<std::uint64_t>(bits)) + " bits > " +
                                   std::to_string(limits.max_bits));
}

}  // namespace

void check_bigint_budget(const DesignSpec& spec, const ExactLimits& limits) {
    check_raw_budget(spec.d(), spec.n(), limits);
}

BigInt count_lh_trials(std::uint32_t d, std::uint64_t n) {
    check_raw_budget(d, n);
    return pow(factorial(n), d - 1);
}

BigInt count_lh_trials(const DesignSpec& spec) { return count_lh_trials(spec.d(), spec.n()); }

BigInt count_os_trials(std::uint32_t d, std::uint64_t p) {
    check_raw_budget(d, static_cast<std::uint64_t>(std::pow(static_cast<double>(p), d)));
    const BigInt width = pow(BigInt(static_cast<unsigned long>(p)), d - 1);
    return pow(factorial(width.get_ui()), static_cast<std::uint64_t>(d) * p);
}

BigInt count_os_trials(const DesignSpec& spec) { return count_os_trials(spec.d(), spec.require_p()); }

namespace {

BigInt big(std::uint64_t v) { return BigInt(static_cast<unsigned long>(v)); }

// p^{d(d-1)(p-1)} (p^{d-1}-1)!^{dp}
BigInt os_tuple_count(std::uint32_t d, std::uint32_t p, std::uint32_t width) {
    const std::uint64_t exponent = static_cast<std::uint64_t>(d) * (d - 1) * (p - 1);
    return pow(big(p), exponent) * pow(factorial(width - 1), static_cast<std::uint64_t>(d) * p);
}

// (n-1)!^{d-1} n^{d-2}
BigInt edge_count(std::uint32_t d, std::uint32_t n) {
    return pow(factorial(n - 1), d - 1) * pow(big(n), d - 2);
}

}  // namespace

BigInt count_trials_containing_tuple(const DesignSpec& spec, IntersectionKind kind) {
    switch (kind) {
        case IntersectionKind::LhsTuple:
            return pow(factorial(spec.n() - 1), spec.d() - 1);
        case IntersectionKind::OsTuple:
            return os_tuple_count(spec.d(), spec.require_p(), spec.band_width());
        default:
            fail(ErrorKind::InvalidArgument, "tuple occurrence count needs kind lhs or os");
    }
}

BigInt count_trials_containing_edge(const DesignSpec& spec) {
    // (n-1)! n!^{d-2}
    return factorial(spec.n() - 1) * pow(factorial(spec.n()), spec.d() - 2);
}

KindParams intersection_params(IntersectionKind kind, const DesignSpec& spec, const ExactLimits& limits) {
    check_bigint_budget(spec, limits);
    const std::uint32_t d = spec.d(), n = spec.n();
    const BigInt nd = pow(big(n), d);
    switch (kind) {
        case IntersectionKind::LhsTuple:
            return {pow(factorial(n - 1), d - 1), count_lh_trials(spec), nd, nd};
        case IntersectionKind::OsTuple: {
            const std::uint32_t p = spec.require_p();
            const BigInt scale = pow(big(p), static_cast<std::uint64_t>(d) * d);
            return {os_tuple_count(d, p, spec.band_width()), count_os_trials(spec), scale, nd};
        }
        case IntersectionKind::LhEdgeAll: {
            const BigInt pairs = big(static_cast<std::uint64_t>(d) * (d - 1) / 2);
            const BigInt scale = big(n) * big(n) * pairs;
            return {edge_count(d, n), count_lh_trials(spec), scale, scale};
        }
        case IntersectionKind::LhEdgeSubBlock: {
            const std::uint32_t p = spec.require_p();
            // (p^d - 1)!^{d-1} p^{d^2-2d} == (n-1)!^{d-1} n^{d-2}
            const BigInt scale = pow(big(p), 2ull * d - 2);
            return {edge_count(d, n), count_lh_trials(spec), scale, scale};
        }
    }
    fail(ErrorKind::InvalidArgument, "unknown intersection kind");
}

ExactRational hit_rate(IntersectionKind kind, const DesignSpec& spec, const ExactLimits& limits) {
    const KindParams params = intersection_params(kind, spec, limits);
    return ExactRational(params.a, params.b);
}

ExactRational expected_intersection(IntersectionKind kind, const DesignSpec& spec, std::uint64_t m,
                                    const ExactLimits& limits) {
    if (m < 1) fail(ErrorKind::InvalidArgument, "m must be >= 1");
    if (m > limits.max_terms)
        fail(ErrorKind::CapExceeded, "m=" + std::to_string(m) + " exceeds the exact term cap " +
                                         std::to_string(limits.max_terms) + "; use the closed forms");
    const KindParams params = intersection_params(kind, spec, limits);
    BigInt num = params.scale, den = 1;
    for (std::uint64_t i = 0; i < m; ++i) {
        num *= params.a + big(i);
        den *= params.b + big(i);
    }
    return ExactRational(num, den);
}

ExactRational expected_coverage_multiset(IntersectionKind kind, const DesignSpec& spec, std::uint64_t k,
                                         const ExactLimits& limits) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "k must be >= 1");
    if (k > limits.max_terms)
        fail(ErrorKind::CapExceeded, "k=" + std::to_string(k) + " exceeds the exact term cap " +
                                         std::to_string(limits.max_terms) + "; use the closed forms");
    const KindParams params = intersection_params(kind, spec, limits);

    // Over the common denominator D = prod_{i<k} (b+i):
    //   U * D / scale = sum_m (-1)^{m+1} C(k,m) prod_{i<m}(a+i) prod_{m<=i<k}(b+i).
    std::vector<BigInt> suffix(k + 1);  // suffix[m] = prod_{i=m}^{k-1} (b+i)
    suffix[k] = 1;
    for (std::uint64_t i = k; i-- > 0;) suffix[i] = suffix[i + 1] * (params.b + big(i));

    BigInt sum = 0, prefix = 1, choose = 1;  // prefix = prod_{i<m}(a+i), choose = C(k,m)
    for (std::uint64_t m = 1; m <= k; ++m) {
        prefix *= params.a + big(m - 1);
        choose = choose * big(k - m + 1) / big(m);
        BigInt term = choose * prefix * suffix[m];
        if (m % 2 == 1) sum += term; else sum -= term;
    }
    return ExactRational(sum * params.scale, suffix[0] * params.universe);
}

}  // namespace hypercov
