#pragma once

#include <cstdio>
#include <string>
#include <string_view>

namespace trendclass::csv {

/// RFC 4180 field quoting: fields with a comma, quote, CR or LF are quoted
/// and embedded quotes doubled.
inline std::string field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

/// Fixed six-decimal rendering used by every numeric CSV column.
inline std::string number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

} // namespace trendclass::csv
