#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace trendclass {

/// The four trend types. Declaration order is also the tie-break order
/// used wherever an argmax over classes is taken.
enum class TrendClass : std::size_t {
    News = 0,
    OngoingEvent = 1,
    Meme = 2,
    Commemorative = 3,
};

inline constexpr std::size_t kClassCount = 4;

inline constexpr std::array<TrendClass, kClassCount> kAllClasses = {
    TrendClass::News, TrendClass::OngoingEvent, TrendClass::Meme, TrendClass::Commemorative};

constexpr std::size_t index_of(TrendClass c) noexcept { return static_cast<std::size_t>(c); }

/// Canonical corpus-file spelling: "news", "ongoing_event", "meme", "commemorative".
std::string_view to_string(TrendClass c) noexcept;

/// Short column tag used in CSV headers: N, OE, M, C.
std::string_view short_name(TrendClass c) noexcept;

std::optional<TrendClass> parse_class(std::string_view s) noexcept;

/// Per-class values indexed by TrendClass.
template <typename T>
using PerClass = std::array<T, kClassCount>;

/// Index of the largest value; ties go to the earliest class.
template <typename T>
TrendClass argmax_class(const PerClass<T>& values) noexcept {
    std::size_t best = 0;
    for (std::size_t i = 1; i < kClassCount; ++i) {
        if (values[i] > values[best]) best = i;
    }
    return static_cast<TrendClass>(best);
}

} // namespace trendclass
