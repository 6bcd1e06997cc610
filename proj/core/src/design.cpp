#include "hypercov/design.hpp"

#include <algorithm>
#include <string>

#include "hypercov/error.hpp"

namespace hypercov {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "invalid-argument";
        case ErrorKind::Structural: return "structural";
        case ErrorKind::UnsupportedSpec: return "unsupported-spec";
        case ErrorKind::InvalidMode: return "invalid-mode";
        case ErrorKind::Guard: return "guard";
        case ErrorKind::CapExceeded: return "cap-exceeded";
        case ErrorKind::Io: return "io";
    }
    return "unknown";
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint32_t exp) noexcept {
    std::uint64_t result = 1;
    for (std::uint32_t i = 0; i < exp; ++i) {
        if (base != 0 && result > UINT64_MAX / base) return std::nullopt;
        result *= base;
    }
    return result;
}

DesignSpec::DesignSpec(std::uint32_t d, std::uint32_t n, std::optional<std::uint32_t> p)
    : d_(d), n_(n), p_(p) {
    if (d < 2 || d > kMaxDimensions)
        fail(ErrorKind::InvalidArgument,
             "dimension d=" + std::to_string(d) + " outside [2, " + std::to_string(kMaxDimensions) + "]");
    if (n < 2 || n > kMaxLevels)
        fail(ErrorKind::InvalidArgument,
             "levels n=" + std::to_string(n) + " outside [2, " + std::to_string(kMaxLevels) + "]");
    if (p) {
        if (*p < 2) fail(ErrorKind::InvalidArgument, "coarse base p must be >= 2");
        auto pd = checked_pow(*p, d);
        if (!pd || *pd != n)
            fail(ErrorKind::InvalidArgument, "orthogonal spec requires n = p^d, got n=" +
                                                 std::to_string(n) + ", p=" + std::to_string(*p) +
                                                 ", d=" + std::to_string(d));
    }
}

DesignSpec DesignSpec::orthogonal(std::uint32_t d, std::uint32_t p) {
    if (d < 2 || d > kMaxDimensions)
        fail(ErrorKind::InvalidArgument, "dimension d=" + std::to_string(d) + " out of range");
    if (p < 2) fail(ErrorKind::InvalidArgument, "coarse base p must be >= 2");
    auto n = checked_pow(p, d);
    if (!n || *n > kMaxLevels)
        fail(ErrorKind::InvalidArgument,
             "p^d exceeds the level limit for p=" + std::to_string(p) + ", d=" + std::to_string(d));
    return DesignSpec(d, static_cast<std::uint32_t>(*n), p);
}

std::uint32_t DesignSpec::require_p() const {
    if (!p_) fail(ErrorKind::UnsupportedSpec, "operation requires an orthogonal spec (n = p^d)");
    return *p_;
}

std::uint32_t DesignSpec::band_width() const { return n_ / require_p(); }

BandValue decode_value(const DesignSpec& spec, std::uint32_t v) {
    const std::uint32_t width = spec.band_width();
    if (v < 1 || v > spec.n())
        fail(ErrorKind::InvalidArgument, "value " + std::to_string(v) + " outside [1, n]");
    return {(v - 1) / width + 1, (v - 1) % width + 1};
}

std::uint32_t encode_value(const DesignSpec& spec, BandValue bv) {
    const std::uint32_t p = spec.require_p();
    const std::uint32_t width = spec.band_width();
    if (bv.coarse < 1 || bv.coarse > p || bv.fine < 1 || bv.fine > width)
        fail(ErrorKind::InvalidArgument, "band value out of range");
    return (bv.coarse - 1) * width + bv.fine;
}

SubBlockCoord sub_block_of(const DesignSpec& spec, std::span<const std::uint32_t> point) {
    SubBlockCoord sb;
    sb.coarse.reserve(point.size());
    for (auto v : point) sb.coarse.push_back(decode_value(spec, v).coarse);
    return sb;
}

EdgeProjection::EdgeProjection(std::uint32_t i, std::uint32_t j) : i_(i), j_(j) {
    if (i < 1 || i >= j)
        fail(ErrorKind::InvalidArgument,
             "edge projection needs 1 <= i < j, got (" + std::to_string(i) + "," + std::to_string(j) + ")");
}

void EdgeProjection::check(const DesignSpec& spec) const {
    if (j_ > spec.d())
        fail(ErrorKind::InvalidArgument,
             "edge dimension " + std::to_string(j_) + " exceeds d=" + std::to_string(spec.d()));
}

namespace {

void check_values(const DesignSpec& spec, std::span<const std::uint32_t> values) {
    const std::size_t expected = static_cast<std::size_t>(spec.n()) * spec.d();
    if (values.size() != expected)
        fail(ErrorKind::Structural, "trial needs " + std::to_string(spec.n()) + " rows of width " +
                                        std::to_string(spec.d()) + ", got " +
                                        std::to_string(values.size()) + " values");
    for (auto v : values)
        if (v < 1 || v > spec.n())
            fail(ErrorKind::Structural, "trial entry " + std::to_string(v) + " outside [1, " +
                                            std::to_string(spec.n()) + "]");
}

}  // namespace

Trial::Trial(DesignSpec spec, std::vector<std::uint32_t> values)
    : spec_(std::move(spec)), values_(std::move(values)) {
    check_values(spec_, values_);
}

Trial::Trial(DesignSpec spec, const std::vector<std::vector<std::uint32_t>>& rows) : spec_(std::move(spec)) {
    if (rows.size() != spec_.n())
        fail(ErrorKind::Structural,
             "trial needs " + std::to_string(spec_.n()) + " rows, got " + std::to_string(rows.size()));
    values_.reserve(static_cast<std::size_t>(spec_.n()) * spec_.d());
    for (const auto& row : rows) {
        if (row.size() != spec_.d())
            fail(ErrorKind::Structural, "row width " + std::to_string(row.size()) + " != d=" +
                                            std::to_string(spec_.d()));
        values_.insert(values_.end(), row.begin(), row.end());
    }
    check_values(spec_, values_);
}

Trial Trial::from_columns(DesignSpec spec, const std::vector<std::vector<std::uint32_t>>& columns) {
    if (columns.size() != spec.d())
        fail(ErrorKind::Structural,
             "expected " + std::to_string(spec.d()) + " columns, got " + std::to_string(columns.size()));
    std::vector<std::uint32_t> values(static_cast<std::size_t>(spec.n()) * spec.d());
    for (std::uint32_t c = 0; c < spec.d(); ++c) {
        if (columns[c].size() != spec.n())
            fail(ErrorKind::Structural, "column length " + std::to_string(columns[c].size()) +
                                            " != n=" + std::to_string(spec.n()));
        for (std::uint32_t r = 0; r < spec.n(); ++r)
            values[static_cast<std::size_t>(r) * spec.d() + c] = columns[c][r];
    }
    return Trial(std::move(spec), std::move(values));
}

Trial Trial::canonical() const {
    std::vector<std::uint32_t> order(spec_.n());
    for (std::uint32_t r = 0; r < order.size(); ++r) order[r] = r;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        auto pa = point(a), pb = point(b);
        return std::lexicographical_compare(pa.begin(), pa.end(), pb.begin(), pb.end());
    });
    std::vector<std::uint32_t> sorted;
    sorted.reserve(values_.size());
    for (auto r : order) {
        auto p = point(r);
        sorted.insert(sorted.end(), p.begin(), p.end());
    }
    return Trial(spec_, std::move(sorted));
}

bool operator==(const Trial& a, const Trial& b) {
    if (a.spec_.d() != b.spec_.d() || a.spec_.n() != b.spec_.n()) return false;
    return a.canonical().values_ == b.canonical().values_;
}

bool is_latin(const Trial& trial) {
    const std::uint32_t n = trial.rows();
    std::vector<char> seen(n + 1);
    for (std::uint32_t c = 0; c < trial.cols(); ++c) {
        std::fill(seen.begin(), seen.end(), 0);
        for (std::uint32_t r = 0; r < n; ++r) {
            const auto v = trial.point(r)[c];
            if (seen[v]) return false;
            seen[v] = 1;
        }
    }
    return true;
}

bool is_orthogonal(const Trial& trial) {
    const DesignSpec& spec = trial.spec();
    const std::uint32_t p = spec.require_p();
    const std::uint32_t width = spec.band_width();
    // One slot per coarse tuple, mixed radix in base p.
    std::vector<char> hit(spec.n());
    for (std::uint32_t r = 0; r < trial.rows(); ++r) {
        std::uint64_t slot = 0;
        for (auto v : trial.point(r)) slot = slot * p + (v - 1) / width;
        if (hit[slot]) return false;
        hit[slot] = 1;
    }
    return true;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> project_edges(const Trial& trial,
                                                                  const EdgeProjection& e) {
    e.check(trial.spec());
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(trial.rows());
    for (std::uint32_t r = 0; r < trial.rows(); ++r) {
        auto pt = trial.point(r);
        edges.emplace_back(pt[e.i() - 1], pt[e.j() - 1]);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace hypercov
