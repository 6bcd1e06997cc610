#include "hypercov/mc_sim.hpp"

#include <charconv>
#include <cmath>
#include <string>

#include "hypercov/closed_forms.hpp"
#include "hypercov/error.hpp"
#include "hypercov/exact_count.hpp"
#include "hypercov/parallel.hpp"
#include "hypercov/rng.hpp"

namespace hypercov {

namespace {

std::uint32_t parse_u32(std::string_view text, std::string_view context) {
    std::uint32_t v = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        fail(ErrorKind::InvalidArgument, "bad integer '" + std::string(text) + "' in target '" +
                                             std::string(context) + "'");
    return v;
}

std::vector<std::uint32_t> parse_list(std::string_view text, std::string_view context) {
    std::vector<std::uint32_t> out;
    while (true) {
        const auto comma = text.find(',');
        out.push_back(parse_u32(text.substr(0, comma), context));
        if (comma == std::string_view::npos) break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

}  // namespace

SimTarget SimTarget::full() { return SimTarget(Type::FullTuple, 0); }

SimTarget SimTarget::projected(std::uint32_t t, std::vector<std::uint32_t> dims) {
    if (t < 2) fail(ErrorKind::InvalidArgument, "projected target needs t >= 2");
    if (!dims.empty()) {
        if (dims.size() != t)
            fail(ErrorKind::InvalidArgument, "projected target lists " + std::to_string(dims.size()) +
                                                 " dims for t=" + std::to_string(t));
        std::vector<std::uint32_t> sorted = dims;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1)
            fail(ErrorKind::InvalidArgument, "projected dims must be distinct and >= 1");
    }
    SimTarget target(Type::Projected, t);
    target.dims_ = std::move(dims);
    return target;
}

SimTarget SimTarget::sub_block_edge(EdgeProjection e, std::uint32_t coarse_i, std::uint32_t coarse_j) {
    if (coarse_i < 1 || coarse_j < 1) fail(ErrorKind::InvalidArgument, "coarse bands are 1-based");
    SimTarget target(Type::SubBlockEdge, 2);
    target.edge_ = e;
    target.coarse_i_ = coarse_i;
    target.coarse_j_ = coarse_j;
    return target;
}

SimTarget SimTarget::parse(std::string_view text) {
    if (text == "full") return full();
    if (text.starts_with("proj:")) {
        std::string_view rest = text.substr(5);
        const auto colon = rest.find(':');
        const std::uint32_t t = parse_u32(rest.substr(0, colon), text);
        if (colon == std::string_view::npos) return projected(t);
        return projected(t, parse_list(rest.substr(colon + 1), text));
    }
    if (text.starts_with("edge:")) {
        const auto values = parse_list(text.substr(5), text);
        if (values.size() != 4)
            fail(ErrorKind::InvalidArgument, "edge target needs edge:i,j,pi,pj, got '" + std::string(text) + "'");
        return sub_block_edge(EdgeProjection(values[0], values[1]), values[2], values[3]);
    }
    fail(ErrorKind::InvalidArgument,
         "unknown target '" + std::string(text) + "' (expected full | proj:t[:dims] | edge:i,j,pi,pj)");
}

std::string SimTarget::label() const {
    switch (type_) {
        case Type::FullTuple: return "full";
        case Type::Projected: {
            std::string out = "proj:" + std::to_string(t_);
            for (std::size_t i = 0; i < dims_.size(); ++i) out += (i == 0 ? ":" : ",") + std::to_string(dims_[i]);
            return out;
        }
        case Type::SubBlockEdge:
            return "edge:" + std::to_string(edge_.i()) + "," + std::to_string(edge_.j()) + "," +
                   std::to_string(coarse_i_) + "," + std::to_string(coarse_j_);
    }
    return {};
}

void SimTarget::check(const DesignSpec& spec) const {
    switch (type_) {
        case Type::FullTuple: break;
        case Type::Projected:
            if (t_ > spec.d())
                fail(ErrorKind::InvalidArgument,
                     "projection t=" + std::to_string(t_) + " exceeds d=" + std::to_string(spec.d()));
            for (auto dim : dims_)
                if (dim > spec.d())
                    fail(ErrorKind::InvalidArgument, "projected dim " + std::to_string(dim) + " exceeds d");
            break;
        case Type::SubBlockEdge: {
            const std::uint32_t p = spec.require_p();
            edge_.check(spec);
            if (coarse_i_ > p || coarse_j_ > p) fail(ErrorKind::InvalidArgument, "coarse band exceeds p");
            break;
        }
    }
}

std::uint64_t SimTarget::universe(const DesignSpec& spec) const {
    std::optional<std::uint64_t> u;
    switch (type_) {
        case Type::FullTuple: u = checked_pow(spec.n(), spec.d()); break;
        case Type::Projected: u = checked_pow(spec.n(), t_); break;
        case Type::SubBlockEdge: u = checked_pow(spec.band_width(), 2); break;
    }
    if (!u) fail(ErrorKind::Guard, "cell universe of target " + label() + " exceeds 64-bit keys");
    return *u;
}

double SimTarget::lambda(const DesignSpec& spec) const {
    const double n = spec.n();
    switch (type_) {
        case Type::FullTuple: return std::pow(n, -static_cast<double>(spec.d() - 1));
        case Type::Projected: return std::pow(n, -static_cast<double>(t_ - 1));
        case Type::SubBlockEdge: return 1.0 / n;
    }
    return 0.0;
}

CoveredCells::CoveredCells(std::uint64_t universe) : universe_(universe) {
    if (universe_ <= kDenseLimit) bits_.assign((universe_ + 63) / 64, 0);
}

bool CoveredCells::insert(std::uint64_t key) {
    if (!bits_.empty()) {
        auto& word = bits_[key / 64];
        const std::uint64_t mask = 1ull << (key % 64);
        if (word & mask) return false;
        if (word == 0) touched_.push_back(static_cast<std::uint32_t>(key / 64));
        word |= mask;
        ++size_;
        return true;
    }
    if (!sparse_.insert(key).second) return false;
    ++size_;
    return true;
}

void CoveredCells::clear() {
    for (auto w : touched_) bits_[w] = 0;
    touched_.clear();
    sparse_.clear();
    size_ = 0;
}

CoverageTracker::CoverageTracker(const DesignSpec& spec, SimTarget target)
    : spec_(spec), target_(std::move(target)), cells_((target_.check(spec), target_.universe(spec))) {
    switch (target_.type()) {
        case SimTarget::Type::FullTuple:
            for (std::uint32_t i = 0; i < spec_.d(); ++i) dims0_.push_back(i);
            break;
        case SimTarget::Type::Projected:
            if (target_.dims().empty()) {
                for (std::uint32_t i = 0; i < target_.t(); ++i) dims0_.push_back(i);
            } else {
                for (auto dim : target_.dims()) dims0_.push_back(dim - 1);
            }
            break;
        case SimTarget::Type::SubBlockEdge:
            band_width_ = spec_.band_width();
            break;
    }
}

std::uint64_t CoverageTracker::add(const Trial& trial) {
    const std::uint64_t before = cells_.size();
    const std::uint64_t n = spec_.n();
    if (target_.type() == SimTarget::Type::SubBlockEdge) {
        const std::uint64_t w = band_width_;
        const std::uint32_t i = target_.edge().i() - 1, j = target_.edge().j() - 1;
        for (std::uint32_t r = 0; r < trial.rows(); ++r) {
            auto pt = trial.point(r);
            const std::uint64_t vi = pt[i] - 1, vj = pt[j] - 1;
            if (vi / w + 1 == target_.coarse_i() && vj / w + 1 == target_.coarse_j())
                cells_.insert((vi % w) * w + (vj % w));
        }
    } else {
        for (std::uint32_t r = 0; r < trial.rows(); ++r) {
            auto pt = trial.point(r);
            std::uint64_t key = 0;
            for (auto dim : dims0_) key = key * n + (pt[dim] - 1);
            cells_.insert(key);
        }
    }
    return cells_.size() - before;
}

void SimPlan::validate(const SimLimits& limits) const {
    if (reps < 1) fail(ErrorKind::InvalidArgument, "reps must be >= 1");
    if (k < 1) fail(ErrorKind::InvalidArgument, "k must be >= 1");
    if (kind == SamplerKind::OS) spec.require_p();
    if (targets.empty()) fail(ErrorKind::InvalidArgument, "simulation needs at least one target");
    const long double tracked = static_cast<long double>(k) * spec.n();
    if (tracked > static_cast<long double>(limits.max_tracked_cells))
        fail(ErrorKind::Guard, "memory guard: k*n = " + std::to_string(static_cast<std::uint64_t>(tracked)) +
                                   " tracked cells exceeds " + std::to_string(limits.max_tracked_cells));
    for (const auto& target : targets) {
        target.check(spec);
        (void)target.universe(spec);
    }
}

std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t replicate) noexcept {
    return derive_seed(seed, replicate);
}

namespace {

std::optional<double> multiset_reference(const SimPlan& plan, const SimTarget& target) {
    const DesignSpec& spec = plan.spec;
    std::optional<IntersectionKind> kind;
    const bool full = target.type() == SimTarget::Type::FullTuple ||
                      (target.type() == SimTarget::Type::Projected && target.t() == spec.d());
    if (full) {
        kind = plan.kind == SamplerKind::LHS ? IntersectionKind::LhsTuple : IntersectionKind::OsTuple;
    } else if (plan.kind == SamplerKind::LHS && target.type() == SimTarget::Type::Projected && target.t() == 2) {
        kind = IntersectionKind::LhEdgeAll;
    } else if (plan.kind == SamplerKind::LHS && target.type() == SimTarget::Type::SubBlockEdge) {
        kind = IntersectionKind::LhEdgeSubBlock;
    }
    if (!kind) return std::nullopt;
    try {
        return expected_coverage_multiset(*kind, spec, plan.k).to_double();
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<CoverageReport> simulate_coverage(const SimPlan& plan, const SimLimits& limits) {
    plan.validate(limits);
    const unsigned workers = static_cast<unsigned>(
        std::min<std::uint64_t>(resolve_workers(plan.workers), plan.reps));
    const std::size_t n_targets = plan.targets.size();

    std::vector<std::vector<CoverageTracker>> trackers(workers);
    for (auto& per_worker : trackers)
        for (const auto& target : plan.targets) per_worker.emplace_back(plan.spec, target);

    std::vector<std::vector<double>> fractions(n_targets, std::vector<double>(plan.reps));
    parallel_for(plan.reps, workers, [&](std::uint64_t rep, unsigned worker) {
        auto& mine = trackers[worker];
        for (auto& tr : mine) tr.reset();
        const SamplerConfig cfg{plan.spec, replicate_seed(plan.seed, rep), plan.kind};
        for (std::uint64_t t = 0; t < plan.k; ++t) {
            const Trial trial = gen_trial(cfg, t);
            for (auto& tr : mine) tr.add(trial);
        }
        for (std::size_t i = 0; i < n_targets; ++i) fractions[i][rep] = mine[i].fraction();
    });

    std::vector<CoverageReport> reports;
    reports.reserve(n_targets);
    for (std::size_t i = 0; i < n_targets; ++i) {
        CoverageReport r;
        r.target = plan.targets[i];
        r.fractions = std::move(fractions[i]);
        r.summary = summarize(r.fractions);
        r.lambda = r.target.lambda(plan.spec);
        r.ref_iid = coverage_iid(r.lambda, plan.k);
        r.ref_asym = coverage_asymptotic(r.lambda, plan.k);
        if (plan.exact_reference) r.ref_multiset = multiset_reference(plan, r.target);
        reports.push_back(std::move(r));
    }
    return reports;
}

UniformityMetric subblock_uniformity(std::span<const Trial> trials, const EdgeProjection& e) {
    if (trials.empty()) fail(ErrorKind::InvalidArgument, "uniformity needs at least one trial");
    const DesignSpec& spec = trials.front().spec();
    const std::uint32_t p = spec.require_p();
    e.check(spec);
    const std::uint32_t w = spec.band_width();

    UniformityMetric out;
    out.counts.assign(static_cast<std::size_t>(p) * p, 0);
    for (const auto& trial : trials) {
        if (!(trial.spec() == spec)) fail(ErrorKind::InvalidArgument, "trials must share one spec");
        for (std::uint32_t r = 0; r < trial.rows(); ++r) {
            auto pt = trial.point(r);
            const std::uint32_t qi = (pt[e.i() - 1] - 1) / w, qj = (pt[e.j() - 1] - 1) / w;
            ++out.counts[static_cast<std::size_t>(qi) * p + qj];
        }
    }
    double total = 0;
    for (auto c : out.counts) total += static_cast<double>(c);
    out.mean = total / static_cast<double>(out.counts.size());
    double ss = 0;
    for (auto c : out.counts) ss += (static_cast<double>(c) - out.mean) * (static_cast<double>(c) - out.mean);
    out.variance = ss / static_cast<double>(out.counts.size());
    out.chi_square = chi_square_uniform(out.counts);
    return out;
}

}  // namespace hypercov
