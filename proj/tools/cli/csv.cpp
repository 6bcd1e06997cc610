#include "cli/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace hypercov::cli {

std::string format_real(double value, int digits) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    if (value == 0) return "0";
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::general, digits);
    if (ec != std::errc{}) return "nan";
    return std::string(buf.data(), end);
}

std::string format_optional(const std::optional<std::uint32_t>& value) {
    return value ? std::to_string(*value) : std::string();
}

std::string csv_field(std::string_view text) {
    if (text.find_first_of(",\"\n") == std::string_view::npos) return std::string(text);
    std::string quoted = "\"";
    for (char c : text) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

std::string csv_row(std::initializer_list<std::string> fields) {
    std::string row;
    bool first = true;
    for (const auto& f : fields) {
        if (!first) row += ',';
        row += csv_field(f);
        first = false;
    }
    row += '\n';
    return row;
}

}  // namespace hypercov::cli
