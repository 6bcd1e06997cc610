#include "hypercov/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypercov/error.hpp"
#include "hypercov/mc_sim.hpp"
#include "hypercov/parallel.hpp"
#include "hypercov/rational.hpp"
#include "hypercov/rng.hpp"

namespace hypercov {

std::string_view to_string(SweepMode mode) noexcept {
    return mode == SweepMode::ClosedForm ? "closed_form" : "simulated";
}

SweepMode parse_sweep_mode(std::string_view text) {
    if (text == "closed_form" || text == "closed-form") return SweepMode::ClosedForm;
    if (text == "simulated") return SweepMode::Simulated;
    fail(ErrorKind::InvalidArgument, "unknown sweep mode '" + std::string(text) + "' (closed_form|simulated)");
}

namespace {

void check_level(double level) {
    if (!(level > 0.0 && level <= 1.0))
        fail(ErrorKind::InvalidArgument, "coverage level must lie in (0, 1]");
}

constexpr double kExactBitLimit = 1 << 22;

}  // namespace

bool closed_form_reaches(std::uint32_t n, std::uint32_t t, std::uint64_t k, double level) {
    if (t < 1) fail(ErrorKind::InvalidArgument, "t must be >= 1");
    if (k == 0) return level <= 0.0;
    if (t == 1) return true;  // lambda = 1
    const double log2_cells = (t - 1) * std::log2(static_cast<double>(n));
    if (static_cast<double>(k) * log2_cells <= kExactBitLimit) {
        // (N-1)^k / N^k <= 1 - level  <=>  (N-1)^k <= (1 - level) N^k
        const BigInt cells = pow(BigInt(static_cast<unsigned long>(n)), t - 1);
        const BigInt miss = pow(cells - 1, k);
        const BigInt all = pow(cells, k);
        const mpq_class remaining = mpq_class(1) - mpq_class(level);
        return mpq_class(miss) <= remaining * mpq_class(all);
    }
    const long double lambda = std::pow(static_cast<long double>(n), -static_cast<long double>(t - 1));
    const long double miss = std::exp(static_cast<long double>(k) * std::log1p(-lambda));
    return miss <= 1.0L - static_cast<long double>(level);
}

std::uint64_t find_k_closed_form(std::uint32_t n, std::uint32_t t, double level) {
    check_level(level);
    if (level >= 1.0)
        fail(ErrorKind::InvalidMode, "closed-form coverage never reaches 1; use simulated mode for full coverage");
    if (t < 1) fail(ErrorKind::InvalidArgument, "t must be >= 1");
    if (t == 1) return 1;
    const double lambda = std::pow(static_cast<double>(n), -static_cast<double>(t - 1));
    const double estimate = std::ceil(std::log1p(-level) / std::log1p(-lambda));
    std::uint64_t k = estimate < 1.0 ? 1 : static_cast<std::uint64_t>(estimate);
    while (k > 1 && closed_form_reaches(n, t, k - 1, level)) --k;
    while (!closed_form_reaches(n, t, k, level)) ++k;
    return k;
}

namespace {

struct ReplicateState {
    CoverageTracker tracker;
    std::uint64_t trials = 0;
};

SimTarget projection_target(const SimSearch& s) {
    if (s.t == s.spec.d()) return SimTarget::full();
    return SimTarget::projected(s.t);
}

std::vector<ReplicateState> make_replicates(const SimSearch& s) {
    if (s.reps < 1) fail(ErrorKind::InvalidArgument, "reps must be >= 1");
    if (s.kind == SamplerKind::OS) s.spec.require_p();
    const SimTarget target = projection_target(s);
    std::vector<ReplicateState> reps;
    reps.reserve(s.reps);
    for (std::uint64_t r = 0; r < s.reps; ++r) reps.push_back({CoverageTracker(s.spec, target), 0});
    return reps;
}

}  // namespace

double find_k_simulated(const SimSearch& s, double level) {
    check_level(level);
    if (level >= 1.0) return mean_full_coverage_k(s);

    auto reps = make_replicates(s);
    const unsigned workers = resolve_workers(s.workers);
    const double universe = static_cast<double>(reps.front().tracker.universe());
    const double target_total = level * universe * static_cast<double>(s.reps);

    // totals[k-1] = sum over replicates of cells covered after k trials (exact integers).
    std::vector<std::uint64_t> totals;
    std::uint64_t horizon = 1;
    while (true) {
        const std::uint64_t from = totals.size();
        totals.resize(horizon, 0);
        std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(horizon - from, 0));
        parallel_for(s.reps, workers, [&](std::uint64_t r, unsigned w) {
            auto& state = reps[r];
            const SamplerConfig cfg{s.spec, replicate_seed(s.seed, r), s.kind};
            for (std::uint64_t k = from; k < horizon; ++k) {
                state.tracker.add(gen_trial(cfg, state.trials++));
                partial[w][k - from] += state.tracker.covered();
            }
        });
        for (const auto& part : partial)
            for (std::size_t i = 0; i < part.size(); ++i) totals[from + i] += part[i];

        if (static_cast<double>(totals.back()) >= target_total) break;
        if (horizon >= s.k_max)
            fail(ErrorKind::Guard, "simulated search did not reach the level within k_max=" + std::to_string(s.k_max));
        horizon = std::min(horizon * 2, s.k_max);
    }
    // Bisection over the recorded monotone curve.
    const auto it = std::partition_point(totals.begin(), totals.end(), [&](std::uint64_t covered) {
        return static_cast<double>(covered) < target_total;
    });
    return static_cast<double>(it - totals.begin() + 1);
}

double mean_full_coverage_k(const SimSearch& s) {
    auto reps = make_replicates(s);
    const unsigned workers = resolve_workers(s.workers);
    parallel_for(s.reps, workers, [&](std::uint64_t r, unsigned) {
        auto& state = reps[r];
        const SamplerConfig cfg{s.spec, replicate_seed(s.seed, r), s.kind};
        while (!state.tracker.complete()) {
            if (state.trials >= s.k_max)
                fail(ErrorKind::Guard, "full coverage not reached within k_max=" + std::to_string(s.k_max));
            state.tracker.add(gen_trial(cfg, state.trials++));
        }
    });
    std::uint64_t total = 0;
    for (const auto& state : reps) total += state.trials;
    return static_cast<double>(total) / static_cast<double>(s.reps);
}

double find_k_for_target(const SimSearch& search, double level, SweepMode mode) {
    if (mode == SweepMode::ClosedForm)
        return static_cast<double>(find_k_closed_form(search.spec.n(), search.t, level));
    return find_k_simulated(search, level);
}

SlopeFit fit_slope(std::span<const SweepRow> rows) {
    if (rows.size() < 3) fail(ErrorKind::InvalidArgument, "slope fit needs at least 3 rows");
    const double count = static_cast<double>(rows.size());
    double sx = 0, sy = 0;
    std::vector<double> xs, ys;
    for (const auto& row : rows) {
        if (row.n < 1 || !(row.k_star > 0)) fail(ErrorKind::InvalidArgument, "slope fit needs positive n and k*");
        xs.push_back(std::log10(static_cast<double>(row.n)));
        ys.push_back(std::log10(row.k_star));
        sx += xs.back();
        sy += ys.back();
    }
    const double mx = sx / count, my = sy / count;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0) fail(ErrorKind::InvalidArgument, "slope fit needs at least two distinct n");
    SlopeFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    double rss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        rss += r * r;
    }
    fit.residual = std::sqrt(rss);
    return fit;
}

DesignSpec sweep_spec(std::uint32_t d, std::uint32_t n, SamplerKind kind) {
    if (kind == SamplerKind::LHS) return DesignSpec::latin(d, n);
    const auto root = static_cast<std::uint32_t>(std::llround(std::pow(static_cast<double>(n), 1.0 / d)));
    for (std::uint32_t p = root > 1 ? root - 1 : 1; p <= root + 1; ++p) {
        auto pd = checked_pow(p, d);
        if (p >= 2 && pd && *pd == n) return DesignSpec(d, n, p);
    }
    fail(ErrorKind::UnsupportedSpec, "orthogonal sweep needs n = p^d; n=" + std::to_string(n) +
                                         " is not a perfect power of d=" + std::to_string(d));
}

std::vector<SweepResult> run_sweep(const SweepConfig& config) {
    if (config.t < 1 || config.t > config.d)
        fail(ErrorKind::InvalidArgument, "sweep needs 1 <= t <= d");
    if (config.n_grid.empty()) fail(ErrorKind::InvalidArgument, "sweep needs a non-empty n grid");
    for (double level : config.levels) {
        check_level(level);
        if (config.mode == SweepMode::ClosedForm && level >= 1.0)
            fail(ErrorKind::InvalidMode, "level 1.0 needs simulated mode");
    }
    std::vector<std::uint32_t> grid = config.n_grid;
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

    std::vector<SweepResult> results;
    for (std::size_t li = 0; li < config.levels.size(); ++li) {
        SweepResult result;
        result.level = config.levels[li];
        result.t = config.t;
        result.d = config.d;
        for (std::size_t ni = 0; ni < grid.size(); ++ni) {
            const std::uint32_t n = grid[ni];
            SweepRow row{n, 0};
            if (config.mode == SweepMode::ClosedForm) {
                row.k_star = static_cast<double>(find_k_closed_form(n, config.t, result.level));
            } else {
                SimSearch search{sweep_spec(config.d, n, config.kind), config.kind, config.t, config.reps,
                                 derive_seed(config.seed, li * grid.size() + ni), config.workers};
                row.k_star = find_k_simulated(search, result.level);
            }
            result.rows.push_back(row);
        }
        if (result.rows.size() >= 3) {
            result.fit = fit_slope(result.rows);
            result.fitted = true;
        }
        results.push_back(std::move(result));
    }
    return results;
}

}  // namespace hypercov
