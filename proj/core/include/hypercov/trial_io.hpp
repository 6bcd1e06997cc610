#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hypercov/design.hpp"
#include "hypercov/samplers.hpp"

namespace hypercov {

/// Canonical CSV: d comma-separated 1-based integers per row, n rows, no
/// header. Blocks are preceded by a "# trial t" comment line (t from 1).
void write_trials_csv(std::ostream& out, std::span<const Trial> trials);
std::string trials_to_csv(std::span<const Trial> trials);

/// Reads consecutive blocks of n rows; lines starting with '#' and blank
/// lines are ignored. Throws Structural on malformed rows or a partial block.
std::vector<Trial> parse_trials_csv(std::string_view text, const DesignSpec& spec);

/// {"spec":{"d":..,"n":..,"p":..},"seed":..,"kind":"lhs"|"os","points":[[...],...]}
/// plus an optional "trial" index.
struct TrialEnvelope {
    Trial trial;
    std::uint64_t seed = 0;
    SamplerKind kind = SamplerKind::LHS;
    std::optional<std::uint64_t> index;
};

std::string to_json(const TrialEnvelope& envelope);
/// Serializes a list of envelopes as a JSON array, one element per line.
std::string to_json(std::span<const TrialEnvelope> envelopes);
/// Throws Structural on schema violations.
TrialEnvelope parse_trial_envelope(std::string_view json);
std::vector<TrialEnvelope> parse_trial_envelopes(std::string_view json);

}  // namespace hypercov
