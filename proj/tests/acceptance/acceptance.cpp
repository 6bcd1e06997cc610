#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli/cli.hpp"
#include "hypercov/closed_forms.hpp"
#include "hypercov/exact_count.hpp"
#include "hypercov/mc_sim.hpp"
#include "hypercov/oracle.hpp"
#include "hypercov/sweep.hpp"

using namespace hypercov;

namespace {

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << "[failed: " << what << "] ";
        }
    }
};

using Check = std::function<void(Outcome&)>;

ExactRational q(long num, long den) { return {BigInt(num), BigInt(den)}; }

void oracle_intersections(Outcome& o) {
    struct Case {
        DesignSpec spec;
        SamplerKind sampler;
        IntersectionKind kind;
        std::uint64_t max_m;
    };
    const std::vector<Case> cases{
        {DesignSpec::latin(2, 2), SamplerKind::LHS, IntersectionKind::LhsTuple, 3},
        {DesignSpec::latin(2, 3), SamplerKind::LHS, IntersectionKind::LhsTuple, 2},
        {DesignSpec::latin(3, 2), SamplerKind::LHS, IntersectionKind::LhsTuple, 2},
        {DesignSpec::orthogonal(2, 2), SamplerKind::OS, IntersectionKind::OsTuple, 2},
    };
    int checks = 0;
    for (const auto& c : cases) {
        const auto set = enumerate_trials(c.spec, c.sampler);
        for (std::uint64_t m = 1; m <= c.max_m; ++m, ++checks) {
            const auto oracle = oracle_expected_intersection(set, m);
            const auto exact = expected_intersection(c.kind, c.spec, m);
            o.require(oracle == exact, std::string(to_string(c.kind)) + " d=" + std::to_string(c.spec.d()) +
                                           " n=" + std::to_string(c.spec.n()) + " m=" + std::to_string(m) + ": " +
                                           oracle.str() + " vs " + exact.str());
        }
    }
    o.require(expected_intersection(IntersectionKind::LhsTuple, DesignSpec::latin(2, 2), 2) == q(4, 3), "4/3");
    o.require(expected_intersection(IntersectionKind::LhsTuple, DesignSpec::latin(2, 3), 2) == q(9, 7), "9/7");
    o.require(expected_intersection(IntersectionKind::OsTuple, DesignSpec::orthogonal(2, 2), 2) == q(20, 17),
              "20/17");
    o.detail << checks << " oracle/formula pairs equal; 4/3, 9/7, 20/17 reproduced";
}

void coverage_equality(Outcome& o) {
    const auto lh = DesignSpec::latin(2, 2);
    const auto lh_set = enumerate_trials(lh, SamplerKind::LHS);
    for (std::uint64_t k = 1; k <= 3; ++k) {
        const auto oracle = oracle_expected_coverage(lh_set, k);
        const auto exact = expected_coverage_multiset(IntersectionKind::LhsTuple, lh, k);
        o.require(oracle == exact, "lhs k=" + std::to_string(k) + ": " + oracle.str() + " vs " + exact.str());
    }
    o.require(expected_coverage_multiset(IntersectionKind::LhsTuple, lh, 2) == q(2, 3), "lhs k=2 is 2/3");
    const auto os = DesignSpec::orthogonal(2, 2);
    const auto os_oracle = oracle_expected_coverage(enumerate_trials(os, SamplerKind::OS), 2);
    const auto os_exact = expected_coverage_multiset(IntersectionKind::OsTuple, os, 2);
    o.require(os_oracle == os_exact, "os k=2: " + os_oracle.str() + " vs " + os_exact.str());
    o.detail << "lhs (2,2) k=1..3 equal, k=2 = 2/3; os (2,2) k=2 = " << os_exact.str();
}

void counting_identities(Outcome& o) {
    const auto os_spec = DesignSpec::orthogonal(2, 2);
    const auto os = enumerate_trials(os_spec, SamplerKind::OS);
    o.require(os.trials.size() == 16 && count_os_trials(os_spec) == 16, "16 orthogonal trials");
    for (auto c : oracle_occurrence_counts(os)) o.require(c == 4, "os cell count 4");
    o.require(count_trials_containing_tuple(os_spec, IntersectionKind::OsTuple) == 4, "os formula 4");

    const auto lh_spec = DesignSpec::latin(2, 3);
    const auto lh = enumerate_trials(lh_spec, SamplerKind::LHS);
    o.require(lh.trials.size() == 6, "6 latin trials");
    for (auto c : oracle_occurrence_counts(lh)) o.require(c == 2, "lhs cell count 2");
    o.require(count_trials_containing_tuple(lh_spec, IntersectionKind::LhsTuple) == 2, "lhs formula 2");

    const auto edge_spec = DesignSpec::latin(3, 2);
    const auto edge_set = enumerate_trials(edge_spec, SamplerKind::LHS);
    for (auto c : oracle_occurrence_counts(edge_set, OracleProjection::edges())) o.require(c == 2, "edge count 2");
    o.require(count_trials_containing_edge(edge_spec) == 2, "edge formula 2");
    o.detail << "16 OS trials, 4 per cell; 2 of 6 LHS per cell; 2 per edge";
}

void lambda_equivalence(Outcome& o) {
    int checks = 0;
    for (std::uint32_t p : {2u, 3u}) {
        for (std::uint32_t d : {2u, 3u}) {
            const auto spec = DesignSpec::orthogonal(d, p);
            const ExactRational expected(1, pow(BigInt(spec.n()), d - 1));
            o.require(hit_rate(IntersectionKind::LhsTuple, spec) == expected, "lhs lambda");
            o.require(hit_rate(IntersectionKind::OsTuple, spec) == expected, "os lambda");
            checks += 2;
        }
        for (std::uint32_t d : {2u, 3u, 4u}) {
            const auto spec = DesignSpec::orthogonal(d, p);
            o.require(hit_rate(IntersectionKind::LhEdgeSubBlock, spec) == ExactRational(1, BigInt(spec.n())),
                      "sub-block lambda");
            ++checks;
        }
    }
    o.detail << checks << " exact identities a/b = 1/n^(d-1) or 1/n";
}

CoverageReport simulate_one(const DesignSpec& spec, SamplerKind kind, std::uint64_t k, SimTarget target,
                            std::uint64_t seed) {
    SimPlan plan{spec};
    plan.kind = kind;
    plan.k = k;
    plan.reps = 1000;
    plan.seed = seed;
    plan.targets = {std::move(target)};
    plan.exact_reference = false;
    plan.workers = 1;
    return simulate_coverage(plan).front();
}

void simulation_vs_closed_form(Outcome& o) {
    const auto r = simulate_one(DesignSpec::latin(2, 100), SamplerKind::LHS, 100, SimTarget::full(), 20240501);
    const double iid = 1 - std::pow(0.99, 100);
    const double asym = 1 - std::exp(-1.0);
    o.require(std::fabs(r.summary.mean - iid) <= 4 * r.summary.se, "within 4 SE of iid law");
    o.require(std::fabs(r.summary.mean - asym) <= 0.005, "within 0.005 of 1-1/e");
    o.detail << "mean " << r.summary.mean << ", se " << r.summary.se << ", iid " << iid << ", 1-1/e " << asym;
}

void lhs_os_equivalence(Outcome& o) {
    const auto spec = DesignSpec::orthogonal(2, 10);
    const auto lhs = simulate_one(spec, SamplerKind::LHS, 100, SimTarget::full(), 20240502);
    const auto os = simulate_one(spec, SamplerKind::OS, 100, SimTarget::full(), 20240503);
    const double gap = std::fabs(lhs.summary.mean - os.summary.mean);
    const double tol = 4 * (lhs.summary.se + os.summary.se);
    o.require(gap <= tol, "|mean_LHS - mean_OS| <= 4 (SE_LHS + SE_OS)");
    o.detail << "lhs " << lhs.summary.mean << ", os " << os.summary.mean << ", gap " << gap << " <= " << tol;
}

void projection_law(Outcome& o) {
    const auto spec = DesignSpec::orthogonal(3, 3);
    const double expected = 1 - std::pow(1 - 1.0 / 27, 27);
    for (auto kind : {SamplerKind::LHS, SamplerKind::OS}) {
        const auto r = simulate_one(spec, kind, 27, SimTarget::projected(2), 20240504);
        o.require(std::fabs(r.summary.mean - expected) <= 4 * r.summary.se,
                  std::string(to_string(kind)) + " projected mean within 4 SE");
        o.detail << to_string(kind) << " mean " << r.summary.mean << " (se " << r.summary.se << "); ";
    }
    o.detail << "law " << expected;
}

void slope_at_desk_scale(Outcome& o) {
    for (std::uint32_t t : {2u, 3u}) {
        SweepConfig cfg;
        cfg.d = 5;
        cfg.t = t;
        cfg.levels = {0.5};
        cfg.n_grid = {64, 128, 256, 512};
        const auto r = run_sweep(cfg).front();
        o.require(r.fitted && std::fabs(r.fit.slope - (t - 1.0)) <= 0.05, "closed-form slope t=" + std::to_string(t));
        o.detail << "closed t=" << t << " slope " << r.fit.slope << "; ";
    }
    SweepConfig sim;
    sim.d = 3;
    sim.t = 2;
    sim.levels = {0.5, 1.0};
    sim.n_grid = {8, 27, 64};
    sim.mode = SweepMode::Simulated;
    sim.reps = 200;
    sim.seed = 20240505;
    sim.workers = 0;
    const auto results = run_sweep(sim);
    const auto& half = results.at(0);
    o.require(half.fitted && std::fabs(half.fit.slope - 1.0) <= 0.15, "simulated slope within 0.15 of 1");
    o.detail << "simulated t=2 slope " << half.fit.slope << "; full-coverage slope (reported only) "
             << results.at(1).fit.slope;
}

void error_bound_bracket(Outcome& o) {
    const auto spec = DesignSpec::latin(3, 8);
    for (std::uint64_t k : {4ull, 8ull, 16ull}) {
        const auto r = bracket_exact_vs_asymptotic(IntersectionKind::LhsTuple, spec, k);
        const double gap = std::fabs(r.p_multiset_value - r.p_asym);
        const double bound = r.bounds.e1_bound + r.bounds.e2_bound;
        o.require(r.bounds.valid, "validity flag k=" + std::to_string(k));
        o.require(gap <= bound, "bracket k=" + std::to_string(k));
        o.detail << "k=" << k << " gap " << gap << " <= " << bound << "; ";
    }
}

std::string run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (code != 0) return "exit " + std::to_string(code) + ": " + err.str();
    return out.str();
}

void reproducibility(Outcome& o) {
    const std::vector<std::vector<std::string>> commands{
        {"verify"},
        {"simulate", "--d", "2", "--n", "100", "--k", "100", "--reps", "1000", "--seed", "20240501"},
        {"simulate", "--kind", "os", "--d", "2", "--p", "10", "--k", "100", "--reps", "1000", "--seed", "20240503"},
        {"simulate", "--d", "3", "--p", "3", "--k", "27", "--reps", "1000", "--target", "proj:2", "--seed",
         "20240504"},
        {"sweep", "--d", "5", "--t", "2", "--levels", "0.5", "--n-grid", "64,128,256,512"},
        {"sweep", "--d", "3", "--t", "2", "--levels", "0.5", "--n-grid", "8,27,64", "--mode", "simulated", "--reps",
         "200", "--seed", "20240505"},
    };
    for (const auto& cmd : commands) {
        auto threaded = cmd;
        threaded.insert(threaded.begin(), {"--threads", "3"});
        const auto first = run_cli(cmd);
        const auto second = run_cli(threaded);
        o.require(first.rfind("# provenance: ", 0) == 0, cmd.front() + " produced output");
        o.require(first == second, cmd.front() + " rerun byte-identical");
    }
    o.detail << commands.size() << " commands rerun (1 and 3 workers) with identical bytes";
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, Check>> criteria{
        {"oracle equality of expected intersections", oracle_intersections},
        {"oracle equality of expected coverage", coverage_equality},
        {"counting identities by enumeration", counting_identities},
        {"hit-rate equivalence", lambda_equivalence},
        {"simulation against closed form", simulation_vs_closed_form},
        {"LHS and OS simulated equivalence", lhs_os_equivalence},
        {"projection law t=2", projection_law},
        {"slopes at desk scale", slope_at_desk_scale},
        {"error-bound bracket", error_bound_bracket},
        {"reproducibility", reproducibility},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "[exception: " << e.what() << "]";
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
                  << o.detail.str() << " (" << std::fixed << std::setprecision(2) << secs << " s)"
                  << std::defaultfloat << std::setprecision(6) << '\n';
    }
    std::cout << (failed == 0 ? "all criteria PASS" : std::to_string(failed) + " criteria FAIL") << '\n';
    return failed == 0 ? 0 : 1;
}
