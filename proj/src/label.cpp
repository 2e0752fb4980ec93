#include "trendclass/label.hpp"

namespace trendclass {

std::string_view to_string(TrendClass c) noexcept {
    switch (c) {
    case TrendClass::News: return "news";
    case TrendClass::OngoingEvent: return "ongoing_event";
    case TrendClass::Meme: return "meme";
    case TrendClass::Commemorative: return "commemorative";
    }
    return "unknown";
}

std::string_view short_name(TrendClass c) noexcept {
    switch (c) {
    case TrendClass::News: return "N";
    case TrendClass::OngoingEvent: return "OE";
    case TrendClass::Meme: return "M";
    case TrendClass::Commemorative: return "C";
    }
    return "?";
}

std::optional<TrendClass> parse_class(std::string_view s) noexcept {
    for (auto c : kAllClasses) {
        if (to_string(c) == s) return c;
    }
    return std::nullopt;
}

} // namespace trendclass
