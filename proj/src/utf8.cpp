#include "trendclass/utf8.hpp"

#include <cstdint>

namespace trendclass::utf8 {

namespace {

bool is_continuation(unsigned char c) noexcept { return (c & 0xC0) == 0x80; }

std::size_t expected_length(unsigned char lead) noexcept {
    if (lead < 0x80) return 1;
    if ((lead & 0xE0) == 0xC0 && lead >= 0xC2) return 2;
    if ((lead & 0xF0) == 0xE0) return 3;
    if ((lead & 0xF8) == 0xF0 && lead <= 0xF4) return 4;
    return 0;
}

} // namespace

std::size_t sequence_length(std::string_view s, std::size_t pos) noexcept {
    const auto lead = static_cast<unsigned char>(s[pos]);
    const std::size_t len = expected_length(lead);
    if (len <= 1 || pos + len > s.size()) return 1;
    for (std::size_t k = 1; k < len; ++k) {
        if (!is_continuation(static_cast<unsigned char>(s[pos + k]))) return 1;
    }
    return len;
}

std::size_t code_point_count(std::string_view s) noexcept {
    std::size_t n = 0;
    for (std::size_t pos = 0; pos < s.size(); pos += sequence_length(s, pos)) ++n;
    return n;
}

bool is_valid(std::string_view s) noexcept {
    for (std::size_t pos = 0; pos < s.size();) {
        const auto lead = static_cast<unsigned char>(s[pos]);
        const std::size_t len = sequence_length(s, pos);
        if (len == 1 && lead >= 0x80) return false;
        pos += len;
    }
    return true;
}

std::string to_lower(std::string_view s) {
    std::string out(s);
    for (std::size_t pos = 0; pos < out.size();) {
        const std::size_t len = sequence_length(out, pos);
        auto& b0 = reinterpret_cast<unsigned char&>(out[pos]);
        if (len == 1) {
            if (b0 >= 'A' && b0 <= 'Z') b0 = static_cast<unsigned char>(b0 + ('a' - 'A'));
        } else if (len == 2) {
            auto& b1 = reinterpret_cast<unsigned char&>(out[pos + 1]);
            std::uint32_t cp = ((b0 & 0x1Fu) << 6) | (b1 & 0x3Fu);
            if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) {
                cp += 0x20;
            } else if (cp >= 0x100 && cp <= 0x17F && cp != 0x130 && cp != 0x131 && cp != 0x138 &&
                       cp != 0x149 && cp != 0x178 && cp != 0x17F) {
                // Latin Extended-A alternates upper/lower; the parity of the
                // uppercase form flips between the two halves of the block.
                const bool odd_upper = (cp >= 0x139 && cp <= 0x148) || (cp >= 0x179 && cp <= 0x17E);
                const bool is_upper = odd_upper ? (cp % 2 == 1) : (cp % 2 == 0);
                if (is_upper) cp += 1;
            }
            b0 = static_cast<unsigned char>(0xC0 | (cp >> 6));
            b1 = static_cast<unsigned char>(0x80 | (cp & 0x3F));
        }
        pos += len;
    }
    return out;
}

} // namespace trendclass::utf8
