#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "trendclass/corpus.hpp"

namespace trendclass {

inline constexpr std::size_t kSocialFeatureCount = 15;

/// Fixed index contract of the social representation.
enum class SocialFeature : std::size_t {
    RetweetDepthMean = 0,
    RetweetRatio,
    HashtagsMean,
    LengthMean,
    ExclamationRatio,
    QuestionRatio,
    LinksMean,
    TopicRepetitionMean,
    RepliesRatio,
    SpreadVelocity,
    UserDiversity,
    RetweetedUserDiversity,
    HashtagDiversity,
    LanguageDiversity,
    VocabularyDiversity,
};

std::string_view feature_name(SocialFeature f) noexcept;
std::string_view feature_name(std::size_t index);

struct SocialFeatureVector {
    std::array<double, kSocialFeatureCount> values{};

    double operator[](SocialFeature f) const noexcept { return values[static_cast<std::size_t>(f)]; }
    double& operator[](SocialFeature f) noexcept { return values[static_cast<std::size_t>(f)]; }

    bool operator==(const SocialFeatureVector&) const = default;
};

/// Symbol populations for the Shannon index. Ordered so that summation
/// order, and therefore the result, is deterministic.
using Population = std::map<std::string, std::int64_t, std::less<>>;

/// Sum divided by count, accumulated in index order. Throws EmptyTrendError.
double arithmetic_mean(std::span<const double> values);

/// Tweets per second; the observed span is floored at one second.
double spread_velocity(const TrendingTopic& trend);

/// Natural-log entropy of the population. 0 for an empty or single-symbol
/// population; never exceeds ln(S). Throws InvalidArgumentError on a
/// non-positive count.
double shannon_index(const Population& population);

SocialFeatureVector extract_features(const TrendingTopic& trend);

} // namespace trendclass
