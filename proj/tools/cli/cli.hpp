#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hypercov/error.hpp"

namespace hypercov::cli {

inline constexpr std::string_view kToolName = "hypercov";
inline constexpr std::string_view kVersion = "0.1.0";

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 2,
    kExitGuard = 3,
    kExitMismatch = 4,
    kExitIo = 5,
};

int exit_code_for(ErrorKind kind) noexcept;

/// Runs one invocation. `args` excludes the program name. CSV goes to `out`
/// unless --out names a file; diagnostics and error records go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a, hex encoded.
std::string fnv1a_hex(std::string_view text);

}  // namespace hypercov::cli
