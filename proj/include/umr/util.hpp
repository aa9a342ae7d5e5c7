#ifndef UMR_UTIL_HPP
#define UMR_UTIL_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace umr {

// Number of Unicode scalar values in a UTF-8 string (continuation bytes
// are not counted). Word lengths are measured in characters, not bytes.
std::size_t utf8_length(std::string_view text);

// Splits on runs of ASCII whitespace; never returns empty fields.
std::vector<std::string> split_whitespace(std::string_view text);

std::string_view trim(std::string_view text);

bool starts_with(std::string_view text, std::string_view prefix);

// Renders a fraction in [0,1] as a percentage with two decimals, e.g. 77.08.
std::string format_percent(double fraction);

// Percentage value rounded to two decimals (77.0819 -> 77.08), used so that
// JSON and text reports carry identical numbers.
double percent_2dp(double fraction);

} // namespace umr

#endif
