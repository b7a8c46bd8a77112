#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tdahrv {

// Shortest round-trip decimal form (std::to_chars). Infinities print as
// "inf" / "-inf" and NaN as "nan". Output is independent of locale.
std::string format_real(double value);

// Parses a decimal real; accepts "inf", "-inf", "nan". Returns nullopt on any
// trailing garbage.
std::optional<double> parse_real(std::string_view text);

std::optional<long long> parse_integer(std::string_view text);

std::string_view trim(std::string_view text);

std::vector<std::string_view> split(std::string_view text, char sep);

}  // namespace tdahrv
