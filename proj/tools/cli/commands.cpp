#include "cli/commands.hpp"

#include <charconv>
#include <algorithm>
#include <cmath>

#include "cli/csv.hpp"
#include "hypercov/closed_forms.hpp"
#include "hypercov/error.hpp"
#include "hypercov/exact_count.hpp"
#include "hypercov/mc_sim.hpp"
#include "hypercov/oracle.hpp"
#include "hypercov/samplers.hpp"
#include "hypercov/sweep.hpp"
#include "hypercov/trial_io.hpp"
#include "hypercov/verify.hpp"

namespace hypercov::cli {

namespace {

constexpr std::uint64_t kMaxGeneratedValues = 100'000'000;

std::optional<std::uint32_t> opt(std::uint32_t v) {
    return v == 0 ? std::nullopt : std::optional<std::uint32_t>(v);
}

std::uint32_t parse_u32(std::string_view text, std::string_view what) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        fail(ErrorKind::InvalidArgument, std::string("bad ") + std::string(what) + ": '" + std::string(text) + "'");
    return v;
}

// "i,j,pi,pj"
struct EdgeSpec {
    EdgeProjection edge;
    std::uint32_t ci;
    std::uint32_t cj;
};

EdgeSpec parse_edge(std::string_view text) {
    std::vector<std::uint32_t> parts;
    while (true) {
        const auto comma = text.find(',');
        parts.push_back(parse_u32(text.substr(0, comma), "--edge"));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    if (parts.size() != 4) fail(ErrorKind::InvalidArgument, "--edge expects i,j,pi,pj");
    return {EdgeProjection(parts[0], parts[1]), parts[2], parts[3]};
}

struct DecimalFormat {
    bool rational = false;
    int digits = 12;
};

DecimalFormat parse_format(std::string_view text) {
    if (text == "rational") return {true, 12};
    constexpr std::string_view prefix = "decimal:";
    if (text == "decimal") return {false, 12};
    if (text.substr(0, prefix.size()) == prefix) {
        const auto digits = parse_u32(text.substr(prefix.size()), "--format digits");
        if (digits < 1 || digits > 1000) fail(ErrorKind::InvalidArgument, "--format digits must be in [1, 1000]");
        return {false, static_cast<int>(digits)};
    }
    fail(ErrorKind::InvalidArgument, "--format must be rational or decimal:<digits>");
}

std::string exact_row(IntersectionKind kind, const DesignSpec& spec, std::uint64_t param, const ExactRational& v,
                      const DecimalFormat& fmt) {
    return csv_row({std::string(to_string(kind)), std::to_string(spec.d()), std::to_string(spec.n()),
                    format_optional(spec.p()), std::to_string(param), v.numerator().get_str(),
                    v.denominator().get_str(), fmt.rational ? v.str() : v.to_decimal(fmt.digits)});
}

std::uint32_t law_t(IntersectionKind kind, const DesignSpec& spec) {
    return kind == IntersectionKind::LhsTuple || kind == IntersectionKind::OsTuple ? spec.d() : 2;
}

SamplerKind sampler_for(IntersectionKind kind) {
    return kind == IntersectionKind::OsTuple ? SamplerKind::OS : SamplerKind::LHS;
}

}  // namespace

DesignSpec make_spec(const SpecArgs& args) {
    if (args.d == 0) fail(ErrorKind::InvalidArgument, "--d is required");
    if (args.n == 0 && args.p == 0) fail(ErrorKind::InvalidArgument, "one of --n or --p is required");
    if (args.n == 0) return DesignSpec::orthogonal(args.d, args.p);
    return DesignSpec(args.d, args.n, opt(args.p));
}

CommandOutput run_gen(const GenArgs& args) {
    const DesignSpec spec = make_spec(args.spec);
    const SamplerKind kind = parse_sampler_kind(args.kind);
    if (args.k == 0) fail(ErrorKind::InvalidArgument, "--k must be positive");
    if (args.format != "csv" && args.format != "json")
        fail(ErrorKind::InvalidArgument, "--format must be csv or json");
    const long double values = static_cast<long double>(args.k) * spec.n() * spec.d();
    if (values > kMaxGeneratedValues) fail(ErrorKind::Guard, "gen output exceeds 1e8 values; lower --k");

    const SamplerConfig cfg{spec, args.seed, kind};
    std::vector<Trial> trials;
    trials.reserve(args.k);
    for (std::uint64_t i = 0; i < args.k; ++i) trials.push_back(gen_trial(cfg, i));

    CommandOutput out;
    if (args.format == "csv") {
        out.primary = trials_to_csv(trials);
    } else {
        std::vector<TrialEnvelope> envelopes;
        envelopes.reserve(trials.size());
        for (std::uint64_t i = 0; i < trials.size(); ++i)
            envelopes.push_back({std::move(trials[i]), args.seed, kind, i});
        out.primary = to_json(std::span<const TrialEnvelope>(envelopes));
    }
    return out;
}

CommandOutput run_exact(const ExactArgs& args) {
    const auto kind = parse_intersection_kind(args.kind);
    const DesignSpec spec = make_spec(args.spec);
    const DecimalFormat fmt = parse_format(args.format);
    if (args.m.empty() && args.k.empty()) fail(ErrorKind::InvalidArgument, "one of --m or --k is required");

    CommandOutput out;
    out.primary = "kind,d,n,p,m_or_k,value_num,value_den,value_decimal\n";
    for (auto m : args.m) out.primary += exact_row(kind, spec, m, expected_intersection(kind, spec, m), fmt);
    for (auto k : args.k) out.primary += exact_row(kind, spec, k, expected_coverage_multiset(kind, spec, k), fmt);
    return out;
}

CommandOutput run_law(const LawArgs& args) {
    if (args.k.empty()) fail(ErrorKind::InvalidArgument, "--k is required");
    const DesignSpec spec = make_spec(args.spec);
    CommandOutput out;

    if (args.model == "conjecture") {
        if (args.t == 0) fail(ErrorKind::InvalidArgument, "--model conjecture requires --t");
        if (args.t > spec.d()) fail(ErrorKind::InvalidArgument, "--t must not exceed --d");
        out.primary = "model,d,n,t,k,lambda,value\n";
        for (auto k : args.k) {
            const auto law = CoverageLaw::conjecture(spec.n(), args.t, k);
            out.primary += csv_row({"conjecture", std::to_string(spec.d()), std::to_string(spec.n()),
                                    std::to_string(args.t), std::to_string(k), format_real(law.lambda),
                                    format_real(coverage_closed_form(law))});
        }
        return out;
    }

    if (args.t != 0) fail(ErrorKind::InvalidArgument, "--t applies to --model conjecture only");
    const auto kind = parse_intersection_kind(args.kind);
    const std::string t = std::to_string(law_t(kind, spec));
    const std::string d = std::to_string(spec.d());
    const std::string n = std::to_string(spec.n());

    if (args.model == "iid" || args.model == "asymptotic") {
        const bool iid = args.model == "iid";
        const double lambda = lambda_for(kind, spec);
        out.primary = "model,d,n,t,k,lambda,value\n";
        for (auto k : args.k)
            out.primary += csv_row({args.model, d, n, t, std::to_string(k), format_real(lambda),
                                    format_real(iid ? coverage_iid(lambda, k) : coverage_asymptotic(lambda, k))});
        return out;
    }

    if (args.model == "bracket") {
        out.primary = "model,d,n,t,k,lambda,value,e1_bound,e2_bound,valid,p_iid,p_asym,within_bound\n";
        for (auto k : args.k) {
            const auto r = bracket_exact_vs_asymptotic(kind, spec, k);
            out.primary += csv_row({"bracket", d, n, t, std::to_string(k), format_real(r.lambda),
                                    format_real(r.p_multiset_value), format_real(r.bounds.e1_bound),
                                    format_real(r.bounds.e2_bound), r.bounds.valid ? "true" : "false",
                                    format_real(r.p_iid), format_real(r.p_asym),
                                    r.within_bounds ? "true" : "false"});
        }
        return out;
    }
    fail(ErrorKind::InvalidArgument, "--model must be iid, asymptotic, conjecture or bracket");
}

CommandOutput run_simulate(const SimulateArgs& args) {
    SimPlan plan{make_spec(args.spec)};
    plan.kind = parse_sampler_kind(args.kind);
    plan.k = args.k;
    plan.reps = args.reps;
    plan.seed = args.seed;
    plan.workers = args.workers;
    plan.exact_reference = false;
    plan.targets.clear();
    for (const auto& t : args.targets) plan.targets.push_back(SimTarget::parse(t));

    const auto reports = simulate_coverage(plan);
    CommandOutput out;
    out.primary = "target,d,n,p,kind,k,reps,mean,sd,se,ref_iid,ref_asym\n";
    for (const auto& r : reports)
        out.primary += csv_row({r.target.label(), std::to_string(plan.spec.d()), std::to_string(plan.spec.n()),
                                format_optional(plan.spec.p()), std::string(to_string(plan.kind)),
                                std::to_string(plan.k), std::to_string(plan.reps), format_real(r.summary.mean),
                                format_real(r.summary.sd), format_real(r.summary.se), format_real(r.ref_iid),
                                format_real(r.ref_asym)});
    return out;
}

CommandOutput run_oracle(const OracleArgs& args) {
    const auto kind = parse_intersection_kind(args.kind);
    const DesignSpec spec = make_spec(args.spec);
    const auto set = enumerate_trials(spec, sampler_for(kind));

    OracleProjection projection = OracleProjection::tuples();
    if (kind == IntersectionKind::LhEdgeAll) projection = OracleProjection::edges();
    if (kind == IntersectionKind::LhEdgeSubBlock) {
        const auto e = parse_edge(args.edge);
        projection = OracleProjection::sub_block_edges(e.edge, e.ci, e.cj);
    }

    CommandOutput out;
    out.primary = "mode,kind,d,n,p,m_or_k,oracle,exact,verdict\n";
    std::size_t rows = 0;
    std::size_t bad = 0;
    auto emit = [&](const std::string& param, const std::string& oracle, const std::string& exact) {
        const bool match = oracle == exact;
        ++rows;
        if (!match) ++bad;
        out.primary += csv_row({args.mode, std::string(to_string(kind)), std::to_string(spec.d()),
                                std::to_string(spec.n()), format_optional(spec.p()), param, oracle, exact,
                                match ? "MATCH" : "MISMATCH"});
    };

    if (args.mode == "intersect") {
        if (args.m.empty()) fail(ErrorKind::InvalidArgument, "--mode intersect requires --m");
        for (auto m : args.m)
            emit(std::to_string(m), oracle_expected_intersection(set, m, projection).str(),
                 expected_intersection(kind, spec, m).str());
    } else if (args.mode == "cover") {
        if (args.k.empty()) fail(ErrorKind::InvalidArgument, "--mode cover requires --k");
        for (auto k : args.k)
            emit(std::to_string(k), oracle_expected_coverage(set, k, projection).str(),
                 expected_coverage_multiset(kind, spec, k).str());
    } else if (args.mode == "occurrence") {
        const auto counts = oracle_occurrence_counts(set, projection);
        const auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
        const std::string oracle =
            *lo == *hi ? std::to_string(*lo) : std::to_string(*lo) + ".." + std::to_string(*hi);
        const BigInt exact = kind == IntersectionKind::LhsTuple || kind == IntersectionKind::OsTuple
                                 ? count_trials_containing_tuple(spec, kind)
                                 : count_trials_containing_edge(spec);
        emit("", oracle, exact.get_str());
    } else {
        fail(ErrorKind::InvalidArgument, "--mode must be intersect, cover or occurrence");
    }
    out.mismatch = bad != 0;
    out.status = bad == 0 ? "all " + std::to_string(rows) + " checks MATCH"
                          : std::to_string(bad) + " of " + std::to_string(rows) + " checks MISMATCH";
    return out;
}

CommandOutput run_sweep_command(const SweepArgs& args) {
    SweepConfig cfg;
    cfg.d = args.d;
    cfg.t = args.t;
    cfg.kind = parse_sampler_kind(args.kind);
    cfg.levels = args.levels;
    cfg.n_grid = args.n_grid;
    cfg.mode = parse_sweep_mode(args.mode);
    cfg.reps = args.reps;
    cfg.seed = args.seed;
    cfg.workers = args.workers;

    const auto results = run_sweep(cfg);
    CommandOutput out;
    out.primary = "level,t,n,k_star\n";
    out.summary = "level,t,slope,intercept,residual\n";
    for (const auto& r : results) {
        const std::string level = format_real(r.level);
        const std::string t = std::to_string(r.t);
        for (const auto& row : r.rows) out.primary += csv_row({level, t, std::to_string(row.n), format_real(row.k_star)});
        if (r.fitted)
            out.summary += csv_row({level, t, format_real(r.fit.slope), format_real(r.fit.intercept),
                                    format_real(r.fit.residual)});
        else
            out.summary += csv_row({level, t, "", "", ""});
    }
    return out;
}

CommandOutput run_verify() {
    const auto checks = run_verify_suite();
    CommandOutput out;
    out.primary = "check,kind,d,n,p,param,oracle,exact,verdict\n";
    std::size_t bad = 0;
    for (const auto& c : checks) {
        if (!c.match) ++bad;
        out.primary += csv_row({c.check, c.kind, std::to_string(c.d), std::to_string(c.n), format_optional(c.p),
                                c.param == 0 ? std::string() : std::to_string(c.param), c.oracle, c.exact,
                                c.match ? "MATCH" : "MISMATCH"});
    }
    out.mismatch = bad != 0;
    out.status = bad == 0 ? "all " + std::to_string(checks.size()) + " checks MATCH"
                          : std::to_string(bad) + " of " + std::to_string(checks.size()) + " checks MISMATCH";
    out.primary += "# " + out.status + "\n";
    return out;
}

}  // namespace hypercov::cli
