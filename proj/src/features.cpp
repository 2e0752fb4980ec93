#include "trendclass/features.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "trendclass/error.hpp"
#include "trendclass/text.hpp"

namespace trendclass {

namespace {

constexpr std::array<std::string_view, kSocialFeatureCount> kFeatureNames = {
    "retweet_depth_mean",
    "retweet_ratio",
    "hashtags_mean",
    "length_mean",
    "exclamation_ratio",
    "question_ratio",
    "links_mean",
    "topic_repetition_mean",
    "replies_ratio",
    "spread_velocity",
    "user_diversity",
    "retweeted_user_diversity",
    "hashtag_diversity",
    "language_diversity",
    "vocabulary_diversity",
};

void count(Population& population, std::string_view symbol) {
    auto it = population.find(symbol);
    if (it == population.end()) {
        population.emplace(std::string(symbol), 1);
    } else {
        ++it->second;
    }
}

} // namespace

std::string_view feature_name(SocialFeature f) noexcept { return kFeatureNames[static_cast<std::size_t>(f)]; }

std::string_view feature_name(std::size_t index) {
    if (index >= kSocialFeatureCount) throw InvalidArgumentError("feature index out of range");
    return kFeatureNames[index];
}

double arithmetic_mean(std::span<const double> values) {
    if (values.empty()) throw EmptyTrendError();
    double sum = 0.0;
    for (double v : values) sum += v;
    return sum / static_cast<double>(values.size());
}

double spread_velocity(const TrendingTopic& trend) {
    if (trend.tweets.empty()) throw EmptyTrendError();
    const auto span = std::max<std::int64_t>(trend.latest() - trend.earliest(), 1);
    return static_cast<double>(trend.tweets.size()) / static_cast<double>(span);
}

double shannon_index(const Population& population) {
    std::int64_t total = 0;
    for (const auto& [symbol, n] : population) {
        if (n <= 0) throw InvalidArgumentError("non-positive population count for symbol \"" + symbol + "\"");
        total += n;
    }
    if (population.size() <= 1) return 0.0;

    // Neumaier-compensated sum of -p ln p, in key order.
    const auto n_total = static_cast<double>(total);
    double sum = 0.0;
    double compensation = 0.0;
    for (const auto& [_, n] : population) {
        const double p = static_cast<double>(n) / n_total;
        const double term = -p * std::log(p);
        const double t = sum + term;
        compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term : (term - t) + sum;
        sum = t;
    }
    const double entropy = sum + compensation;
    // 0 <= H <= ln S holds exactly in real arithmetic; keep rounding inside it.
    return std::clamp(entropy, 0.0, std::log(static_cast<double>(population.size())));
}

SocialFeatureVector extract_features(const TrendingTopic& trend) {
    if (trend.tweets.empty()) throw EmptyTrendError();
    const std::size_t n = trend.tweets.size();

    std::array<std::vector<double>, 9> per_tweet;
    for (auto& column : per_tweet) column.reserve(n);

    Population users;
    Population retweeted;
    Population hashtags;
    Population languages;
    Population vocabulary;

    for (const auto& tweet : trend.tweets) {
        const auto syntax = parse_tweet_syntax(tweet.text);
        per_tweet[0].push_back(static_cast<double>(syntax.retweet_depth));
        per_tweet[1].push_back(syntax.is_retweet ? 1.0 : 0.0);
        per_tweet[2].push_back(static_cast<double>(syntax.hashtags.size()));
        per_tweet[3].push_back(static_cast<double>(syntax.char_length));
        per_tweet[4].push_back(syntax.has_exclamation ? 1.0 : 0.0);
        per_tweet[5].push_back(syntax.has_question ? 1.0 : 0.0);
        per_tweet[6].push_back(static_cast<double>(syntax.link_count));
        per_tweet[7].push_back(static_cast<double>(topic_occurrences(tweet.text, trend.topic)));
        per_tweet[8].push_back(syntax.is_reply ? 1.0 : 0.0);

        count(users, tweet.user);
        for (const auto& u : syntax.retweeted_users) count(retweeted, u);
        for (const auto& h : syntax.hashtags) count(hashtags, h);
        count(languages, tweet.language);
        for (const auto& term : normalize_tokens(tweet.text)) count(vocabulary, term);
    }

    SocialFeatureVector features;
    for (std::size_t i = 0; i < per_tweet.size(); ++i) features.values[i] = arithmetic_mean(per_tweet[i]);
    features[SocialFeature::SpreadVelocity] = spread_velocity(trend);
    features[SocialFeature::UserDiversity] = shannon_index(users);
    features[SocialFeature::RetweetedUserDiversity] = shannon_index(retweeted);
    features[SocialFeature::HashtagDiversity] = shannon_index(hashtags);
    features[SocialFeature::LanguageDiversity] = shannon_index(languages);
    features[SocialFeature::VocabularyDiversity] = shannon_index(vocabulary);
    return features;
}

} // namespace trendclass
