#include "hypercov/oracle.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "hypercov/error.hpp"
#include "hypercov/exact_count.hpp"

namespace hypercov {

namespace {

std::vector<std::vector<std::uint32_t>> all_permutations(std::uint32_t size) {
    std::vector<std::uint32_t> perm(size);
    std::iota(perm.begin(), perm.end(), 1u);
    std::vector<std::vector<std::uint32_t>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

void guard_count(const BigInt& count, std::uint64_t limit, const char* what) {
    if (count > BigInt(static_cast<unsigned long>(limit)))
        fail(ErrorKind::Guard, std::string(what) + " count " + count.get_str() + " exceeds oracle guard " +
                                   std::to_string(limit));
}

// Advances a mixed-radix counter; false once it wraps to all zeros.
bool bump_counter(std::vector<std::size_t>& digits, std::size_t radix) {
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (++digits[i] < radix) return true;
        digits[i] = 0;
    }
    return false;
}

std::vector<Trial> enumerate_lh(const DesignSpec& spec) {
    const std::uint32_t n = spec.n(), d = spec.d();
    const auto perms = all_permutations(n);
    std::vector<std::uint32_t> identity(n);
    std::iota(identity.begin(), identity.end(), 1u);

    std::vector<Trial> out;
    std::vector<std::size_t> choice(d - 1, 0);
    do {
        std::vector<std::vector<std::uint32_t>> columns{identity};
        for (auto c : choice) columns.push_back(perms[c]);
        out.push_back(Trial::from_columns(spec, columns));
    } while (bump_counter(choice, perms.size()));
    return out;
}

std::vector<Trial> enumerate_os(const DesignSpec& spec) {
    const std::uint32_t n = spec.n(), d = spec.d(), p = spec.require_p();
    const std::uint32_t width = spec.band_width();
    const auto perms = all_permutations(width);

    // The p^d coarse tuples in lexicographic order (0-based bands).
    std::vector<std::vector<std::uint32_t>> coarse_tuples;
    std::vector<std::size_t> digits(d, 0);
    do {
        coarse_tuples.emplace_back(digits.begin(), digits.end());
    } while (bump_counter(digits, p));

    std::vector<Trial> out;
    std::vector<std::size_t> choice(static_cast<std::size_t>(d) * p, 0);  // f_{i,j} index per (i, j)
    std::vector<std::uint32_t> used(choice.size());
    do {
        std::fill(used.begin(), used.end(), 0);
        std::vector<std::uint32_t> values;
        values.reserve(static_cast<std::size_t>(n) * d);
        for (const auto& tuple : coarse_tuples) {
            for (std::uint32_t i = 0; i < d; ++i) {
                const std::size_t f = static_cast<std::size_t>(i) * p + tuple[i];
                values.push_back(tuple[i] * width + perms[choice[f]][used[f]++]);
            }
        }
        out.push_back(Trial(spec, std::move(values)).canonical());
    } while (bump_counter(choice, perms.size()));
    return out;
}

bool trial_less(const Trial& a, const Trial& b) {
    return std::lexicographical_compare(a.values().begin(), a.values().end(), b.values().begin(),
                                        b.values().end());
}

bool trial_same(const Trial& a, const Trial& b) {
    return std::equal(a.values().begin(), a.values().end(), b.values().begin(), b.values().end());
}

// Dense bitset over the cell universe.
using Bits = std::vector<std::uint64_t>;

Bits to_bits(const std::vector<std::uint64_t>& keys, std::uint64_t universe) {
    Bits bits((universe + 63) / 64, 0);
    for (auto k : keys) bits[k / 64] |= 1ull << (k % 64);
    return bits;
}

std::uint64_t popcount(const Bits& bits) {
    std::uint64_t c = 0;
    for (auto w : bits) c += static_cast<std::uint64_t>(std::popcount(w));
    return c;
}

std::vector<Bits> trial_bits(const EnumeratedTrialSet& set, const OracleProjection& projection,
                             const OracleLimits& limits) {
    const std::uint64_t universe = projection.universe(set.spec);
    if (universe > limits.max_universe)
        fail(ErrorKind::Guard, "cell universe " + std::to_string(universe) + " exceeds oracle guard");
    std::vector<Bits> out;
    out.reserve(set.trials.size());
    for (const auto& t : set.trials) out.push_back(to_bits(projection.keys(t), universe));
    return out;
}

void guard_multisets(std::size_t trials, std::uint64_t m, const OracleLimits& limits) {
    guard_count(binomial(BigInt(static_cast<unsigned long>(trials + m - 1)), m), limits.max_multisets,
                "multiset");
}

// Visits every m-multiset as a nondecreasing index sequence, folding the
// members' bitsets with `combine` and handing the result to `visit`.
template <typename Combine, typename Visit>
void for_each_multiset(const std::vector<Bits>& bits, std::uint64_t m, Combine combine, Visit visit) {
    const std::size_t words = bits.empty() ? 0 : bits.front().size();
    std::vector<Bits> acc(m + 1, Bits(words));
    auto recurse = [&](auto&& self, std::uint64_t depth, std::size_t start) -> void {
        if (depth == m) {
            visit(acc[m]);
            return;
        }
        for (std::size_t t = start; t < bits.size(); ++t) {
            if (depth == 0) {
                acc[1] = bits[t];
            } else {
                for (std::size_t w = 0; w < words; ++w) acc[depth + 1][w] = combine(acc[depth][w], bits[t][w]);
            }
            self(self, depth + 1, t);
        }
    };
    recurse(recurse, 0, 0);
}

}  // namespace

EnumeratedTrialSet enumerate_trials(const DesignSpec& spec, SamplerKind kind, const OracleLimits& limits) {
    EnumeratedTrialSet set{spec, kind, {}};
    if (kind == SamplerKind::LHS) {
        guard_count(count_lh_trials(spec), limits.max_trials, "LH trial");
        set.trials = enumerate_lh(spec);
    } else {
        guard_count(count_os_trials(spec), limits.max_trials, "orthogonal trial");
        set.trials = enumerate_os(spec);
    }
    std::sort(set.trials.begin(), set.trials.end(), trial_less);
    set.trials.erase(std::unique(set.trials.begin(), set.trials.end(), trial_same), set.trials.end());
    return set;
}

OracleProjection OracleProjection::sub_block_edges(EdgeProjection e, std::uint32_t coarse_i, std::uint32_t coarse_j) {
    OracleProjection proj(Mode::SubBlockEdges);
    proj.edge_ = e;
    proj.coarse_i_ = coarse_i;
    proj.coarse_j_ = coarse_j;
    return proj;
}

std::uint64_t OracleProjection::universe(const DesignSpec& spec) const {
    const std::uint64_t n = spec.n(), d = spec.d();
    switch (mode_) {
        case Mode::Tuples: {
            auto u = checked_pow(n, spec.d());
            if (!u) fail(ErrorKind::Guard, "tuple universe exceeds 64 bits");
            return *u;
        }
        case Mode::Edges: return d * (d - 1) / 2 * n * n;
        case Mode::SubBlockEdges: {
            const std::uint64_t w = spec.band_width();
            return w * w;
        }
    }
    return 0;
}

std::vector<std::uint64_t> OracleProjection::keys(const Trial& trial) const {
    const DesignSpec& spec = trial.spec();
    const std::uint64_t n = spec.n();
    const std::uint32_t d = spec.d();
    std::vector<std::uint64_t> keys;
    switch (mode_) {
        case Mode::Tuples:
            for (std::uint32_t r = 0; r < trial.rows(); ++r) {
                std::uint64_t key = 0;
                for (auto v : trial.point(r)) key = key * n + (v - 1);
                keys.push_back(key);
            }
            break;
        case Mode::Edges:
            for (std::uint32_t r = 0; r < trial.rows(); ++r) {
                auto pt = trial.point(r);
                std::uint64_t pair = 0;
                for (std::uint32_t i = 0; i < d; ++i)
                    for (std::uint32_t j = i + 1; j < d; ++j, ++pair)
                        keys.push_back(pair * n * n + (pt[i] - 1) * n + (pt[j] - 1));
            }
            break;
        case Mode::SubBlockEdges: {
            edge_.check(spec);
            const std::uint32_t p = spec.require_p();
            if (coarse_i_ < 1 || coarse_i_ > p || coarse_j_ < 1 || coarse_j_ > p)
                fail(ErrorKind::InvalidArgument, "coarse band outside [1, p]");
            const std::uint64_t w = spec.band_width();
            for (std::uint32_t r = 0; r < trial.rows(); ++r) {
                auto pt = trial.point(r);
                const BandValue bi = decode_value(spec, pt[edge_.i() - 1]);
                const BandValue bj = decode_value(spec, pt[edge_.j() - 1]);
                if (bi.coarse == coarse_i_ && bj.coarse == coarse_j_)
                    keys.push_back((bi.fine - 1) * w + (bj.fine - 1));
            }
            break;
        }
    }
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

ExactRational oracle_expected_intersection(const EnumeratedTrialSet& set, std::uint64_t m,
                                           const OracleProjection& projection, const OracleLimits& limits) {
    if (m < 1) fail(ErrorKind::InvalidArgument, "m must be >= 1");
    guard_multisets(set.trials.size(), m, limits);
    const auto bits = trial_bits(set, projection, limits);
    std::uint64_t total = 0, count = 0;
    for_each_multiset(
        bits, m, [](std::uint64_t a, std::uint64_t b) { return a & b; },
        [&](const Bits& common) {
            total += popcount(common);
            ++count;
        });
    return ExactRational(BigInt(static_cast<unsigned long>(total)), BigInt(static_cast<unsigned long>(count)));
}

ExactRational oracle_expected_coverage(const EnumeratedTrialSet& set, std::uint64_t k,
                                       const OracleProjection& projection, const OracleLimits& limits) {
    if (k < 1) fail(ErrorKind::InvalidArgument, "k must be >= 1");
    guard_multisets(set.trials.size(), k, limits);
    const auto bits = trial_bits(set, projection, limits);
    std::uint64_t total = 0, count = 0;
    for_each_multiset(
        bits, k, [](std::uint64_t a, std::uint64_t b) { return a | b; },
        [&](const Bits& covered) {
            total += popcount(covered);
            ++count;
        });
    const BigInt universe(static_cast<unsigned long>(projection.universe(set.spec)));
    return ExactRational(BigInt(static_cast<unsigned long>(total)), BigInt(static_cast<unsigned long>(count)) * universe);
}

std::vector<std::uint64_t> oracle_occurrence_counts(const EnumeratedTrialSet& set, const OracleProjection& projection,
                                                    const OracleLimits& limits) {
    const std::uint64_t universe = projection.universe(set.spec);
    if (universe > limits.max_universe)
        fail(ErrorKind::Guard, "cell universe " + std::to_string(universe) + " exceeds oracle guard");
    std::vector<std::uint64_t> counts(universe, 0);
    for (const auto& t : set.trials)
        for (auto key : projection.keys(t)) ++counts[key];
    return counts;
}

}  // namespace hypercov
