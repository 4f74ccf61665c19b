#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace talkturn {

std::vector<std::string> split_whitespace(std::string_view text);
std::vector<std::string_view> split_whitespace_views(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

std::string_view trim(std::string_view s);

// Collapses runs of whitespace to single spaces and trims the ends.
std::string collapse_whitespace(std::string_view s);

bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

// Fixed-precision decimal rendering (used by the interchange formats).
std::string format_fixed(double value, int decimals);

} // namespace talkturn
