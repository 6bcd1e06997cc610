#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypercov {

/// Failure categories. The CLI maps each category onto a distinct exit code.
enum class ErrorKind {
    InvalidArgument,   // bad parameter value or combination
    Structural,        // malformed trial matrix
    UnsupportedSpec,   // operation needs an orthogonal (n = p^d) spec
    InvalidMode,       // e.g. full coverage requested from a closed form
    Guard,             // oracle / memory / bigint budget exceeded
    CapExceeded,       // exact inclusion-exclusion term cap exceeded
    Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace hypercov
