#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hypercov/design.hpp"

namespace hypercov::cli {

// 0 marks an unset dimension, level count or band count.
struct SpecArgs {
    std::uint32_t d = 0;
    std::uint32_t n = 0;
    std::uint32_t p = 0;
};

/// --p alone implies n = p^d; --n alone gives a Latin-only spec.
DesignSpec make_spec(const SpecArgs& args);

struct GenArgs {
    SpecArgs spec;
    std::string kind = "lhs";
    std::uint64_t k = 1;
    std::uint64_t seed = 0;
    std::string format = "csv";
};

struct ExactArgs {
    SpecArgs spec;
    std::string kind;
    std::vector<std::uint64_t> m;
    std::vector<std::uint64_t> k;
    std::string format = "decimal:12";
};

struct LawArgs {
    SpecArgs spec;
    std::string kind = "lhs";
    std::uint32_t t = 0;
    std::vector<std::uint64_t> k;
    std::string model = "iid";
};

struct SimulateArgs {
    SpecArgs spec;
    std::string kind = "lhs";
    std::uint64_t k = 1;
    std::uint64_t reps = 1000;
    std::vector<std::string> targets{"full"};
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct OracleArgs {
    SpecArgs spec;
    std::string kind = "lhs";
    std::vector<std::uint64_t> m;
    std::vector<std::uint64_t> k;
    std::string mode = "intersect";
    std::string edge = "1,2,1,1";
};

struct SweepArgs {
    std::uint32_t d = 5;
    std::uint32_t t = 2;
    std::string kind = "lhs";
    std::vector<double> levels{0.5};
    std::vector<std::uint32_t> n_grid{64, 128, 256, 512};
    std::string mode = "closed_form";
    std::uint64_t reps = 200;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

/// Body text for the primary artifact, and for sweep the summary table.
struct CommandOutput {
    std::string primary;
    std::string summary;
    bool mismatch = false;
    std::string status;  // one-line human summary, may be empty
};

CommandOutput run_gen(const GenArgs& args);
CommandOutput run_exact(const ExactArgs& args);
CommandOutput run_law(const LawArgs& args);
CommandOutput run_simulate(const SimulateArgs& args);
CommandOutput run_oracle(const OracleArgs& args);
CommandOutput run_sweep_command(const SweepArgs& args);
CommandOutput run_verify();

}  // namespace hypercov::cli
