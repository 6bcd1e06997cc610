#include "hypercov/closed_forms.hpp"

#include <cmath>
#include <string>

#include "hypercov/error.hpp"

namespace hypercov {

std::string_view to_string(CoverageModel model) noexcept {
    switch (model) {
        case CoverageModel::IidExact: return "iid";
        case CoverageModel::AsymptoticExp: return "asymptotic";
        case CoverageModel::ConjectureT: return "conjecture";
    }
    return "unknown";
}

CoverageLaw CoverageLaw::conjecture(std::uint32_t n, std::uint32_t t, std::uint64_t k) {
    if (t < 1) fail(ErrorKind::InvalidArgument, "subspace dimension t must be >= 1");
    if (n < 2) fail(ErrorKind::InvalidArgument, "n must be >= 2");
    CoverageLaw law;
    law.lambda = std::pow(static_cast<double>(n), -static_cast<double>(t - 1));
    law.k = k;
    law.model = CoverageModel::ConjectureT;
    law.t = t;
    return law;
}

void CoverageLaw::validate() const {
    if (!(lambda > 0.0 && lambda <= 1.0))
        fail(ErrorKind::InvalidArgument, "lambda must lie in (0, 1]");
    if (model == CoverageModel::ConjectureT && !t)
        fail(ErrorKind::InvalidArgument, "conjecture law needs t");
}

double lambda_for(IntersectionKind kind, const DesignSpec& spec) {
    return hit_rate(kind, spec).to_double();
}

double coverage_iid(double lambda, std::uint64_t k) {
    if (k == 0) return 0.0;
    if (lambda >= 1.0) return 1.0;
    return -std::expm1(static_cast<double>(k) * std::log1p(-lambda));
}

double coverage_asymptotic(double lambda, std::uint64_t k) {
    return -std::expm1(-static_cast<double>(k) * lambda);
}

double coverage_closed_form(const CoverageLaw& law) {
    law.validate();
    switch (law.model) {
        case CoverageModel::IidExact:
        case CoverageModel::ConjectureT:
            return coverage_iid(law.lambda, law.k);
        case CoverageModel::AsymptoticExp:
            return coverage_asymptotic(law.lambda, law.k);
    }
    return 0.0;
}

ErrorBounds error_bounds(IntersectionKind kind, const DesignSpec& spec, std::uint64_t k) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "k must be >= 1");
    const KindParams params = intersection_params(kind, spec);
    const double lambda = ExactRational(params.a, params.b).to_double();
    const double kd = static_cast<double>(k);

    ErrorBounds out;
    out.a = params.a;
    const ExactRational t_exact(BigInt(static_cast<unsigned long>(k)) * BigInt(static_cast<unsigned long>(k - 1)),
                                params.a);
    out.t_ratio = t_exact.to_double();
    out.valid = t_exact <= ExactRational(1);
    out.e1_bound = std::exp(kd * lambda) * out.t_ratio;
    out.e2_bound = std::exp(-kd * lambda) * kd * lambda * lambda;
    return out;
}

BracketReport bracket_exact_vs_asymptotic(IntersectionKind kind, const DesignSpec& spec, std::uint64_t k,
                                          const ExactLimits& limits) {
    BracketReport r{kind, k, 0, ExactRational(), 0, 0, 0, {}, false};
    r.p_multiset = expected_coverage_multiset(kind, spec, k, limits);
    r.p_multiset_value = r.p_multiset.to_double();
    r.lambda = hit_rate(kind, spec, limits).to_double();
    r.p_iid = coverage_iid(r.lambda, k);
    r.p_asym = coverage_asymptotic(r.lambda, k);
    r.bounds = error_bounds(kind, spec, k);
    r.within_bounds = std::abs(r.p_multiset_value - r.p_asym) <= r.bounds.e1_bound + r.bounds.e2_bound;
    return r;
}

}  // namespace hypercov
