#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Minimal UTF-8 helpers. Invalid byte sequences are treated as one code
// point per byte so that counting never fails on hostile input.
namespace trendclass::utf8 {

std::size_t code_point_count(std::string_view s) noexcept;

/// Lowercases ASCII, Latin-1 Supplement and Latin Extended-A letters.
/// Every mapping preserves the encoded byte length.
std::string to_lower(std::string_view s);

/// Byte length of the code point starting at s[pos] (1 for invalid bytes).
std::size_t sequence_length(std::string_view s, std::size_t pos) noexcept;

bool is_valid(std::string_view s) noexcept;

} // namespace trendclass::utf8
