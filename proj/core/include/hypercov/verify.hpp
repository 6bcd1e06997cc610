#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hypercov {

/// One oracle-versus-formula comparison. Values are exact strings (rationals
/// or integers), compared for equality.
struct VerifyCheck {
    std::string check;  // intersect | cover | occurrence | count | lambda
    std::string kind;   // lhs | os | edge | edge-subblock
    std::uint32_t d = 0;
    std::uint32_t n = 0;
    std::optional<std::uint32_t> p;
    std::uint64_t param = 0;  // m or k; 0 when not applicable
    std::string oracle;
    std::string exact;
    bool match = false;
};

/// The tiny-instance suite: multiset intersections and union coverage by
/// enumeration against the inclusion-exclusion formulas, per-cell and
/// per-edge occurrence counts, trial counts, and the exact lambda identities.
std::vector<VerifyCheck> run_verify_suite();

}  // namespace hypercov
