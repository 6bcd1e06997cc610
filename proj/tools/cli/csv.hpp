#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>

namespace hypercov::cli {

/// Shortest general-format rendering with at most `digits` significant digits.
std::string format_real(double value, int digits = 12);

std::string format_optional(const std::optional<std::uint32_t>& value);

/// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(std::string_view text);

std::string csv_row(std::initializer_list<std::string> fields);

}  // namespace hypercov::cli
