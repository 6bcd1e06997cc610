#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hypercov/design.hpp"
#include "hypercov/exact_count.hpp"

namespace hypercov {

enum class CoverageModel {
    IidExact,       // 1 - (1 - lambda)^k: exact for k independent trials
    AsymptoticExp,  // 1 - exp(-k lambda)
    ConjectureT,    // 1 - (1 - n^{-(t-1)})^k; proven only for t = 2 and t = d
};

std::string_view to_string(CoverageModel model) noexcept;

struct CoverageLaw {
    double lambda = 1.0;
    std::uint64_t k = 0;
    CoverageModel model = CoverageModel::IidExact;
    std::optional<std::uint32_t> t;

    /// Law for projections onto t dimensions: lambda = n^{-(t-1)}.
    static CoverageLaw conjecture(std::uint32_t n, std::uint32_t t, std::uint64_t k);
    /// Throws InvalidArgument when lambda is outside (0, 1].
    void validate() const;
};

/// lambda = a/b of the kind, as a double. 1/n^{d-1} for tuples, 1/n for edges.
double lambda_for(IntersectionKind kind, const DesignSpec& spec);

double coverage_closed_form(const CoverageLaw& law);

/// 1 - (1 - lambda)^k, via expm1(k log1p(-lambda)).
double coverage_iid(double lambda, std::uint64_t k);
/// 1 - exp(-k lambda).
double coverage_asymptotic(double lambda, std::uint64_t k);

/// Bounds on the two error terms in P = 1 - exp(-k lambda) + E2 + E1.
struct ErrorBounds {
    double e1_bound = 0;  // exp(k lambda) k(k-1)/a
    double e2_bound = 0;  // exp(-k lambda) k lambda^2
    BigInt a;
    double t_ratio = 0;   // k(k-1)/a
    bool valid = false;   // the E1 bound assumes k(k-1)/a <= 1
};

ErrorBounds error_bounds(IntersectionKind kind, const DesignSpec& spec, std::uint64_t k);

struct BracketReport {
    IntersectionKind kind;
    std::uint64_t k = 0;
    double lambda = 0;
    ExactRational p_multiset;
    double p_multiset_value = 0;
    double p_iid = 0;
    double p_asym = 0;
    ErrorBounds bounds;
    /// |P_multiset - P_asym| <= e1 + e2; meaningful only when bounds.valid.
    bool within_bounds = false;
};

/// Exact multiset coverage against both closed forms. Propagates CapExceeded.
BracketReport bracket_exact_vs_asymptotic(IntersectionKind kind, const DesignSpec& spec, std::uint64_t k,
                                          const ExactLimits& limits = {});

}  // namespace hypercov
