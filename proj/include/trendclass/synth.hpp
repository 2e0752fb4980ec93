#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "trendclass/corpus.hpp"
#include "trendclass/label.hpp"

namespace trendclass {

/// Closed range a per-trend parameter is drawn from uniformly.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};

/// Finite pool of symbols sampled with Zipf-like skew: P(rank k) ~ 1/k^skew.
struct PoolSpec {
    std::size_t size = 1;
    double skew = 1.0;
};

/// Sampling parameters for one trend class. Each Interval is sampled once
/// per trend, then drives per-tweet draws.
struct ClassProfile {
    Interval retweet_probability;
    double deeper_retweet_probability = 0.2;  // P(depth > k | depth >= k)
    std::size_t max_retweet_depth = 4;
    Interval hashtag_rate;      // Poisson mean per original tweet
    Interval length_mean;       // target code points of an original tweet
    double length_jitter = 0.2;  // relative sd around the trend's length
    Interval exclamation_probability;
    Interval question_probability;
    Interval link_rate;          // Poisson mean per original tweet
    Interval topic_repetition;   // mean topic uses per original tweet (>= 1)
    Interval reply_probability;  // among non-retweets
    Interval mean_gap_seconds;   // exponential inter-tweet gaps
    PoolSpec users;
    PoolSpec retweeted_users;
    PoolSpec hashtags;
    PoolSpec languages;  // size capped at the built-in language list
    PoolSpec vocabulary;
    std::vector<std::string> signature_terms;
    double signature_rate = 0.1;  // share of words drawn from signature_terms
};

using ProfileSet = PerClass<ClassProfile>;

/// Throws InvalidArgumentError naming the offending field.
void validate_profile(const ClassProfile& profile);

const ProfileSet& default_profiles();

inline constexpr std::size_t kDefaultTrendsPerClass = 200;
inline constexpr std::size_t kDefaultTweetsPerTrend = 200;

struct SynthOptions {
    std::size_t trends_per_class = kDefaultTrendsPerClass;
    std::size_t tweets_per_trend = kDefaultTweetsPerTrend;
    std::uint64_t seed = 42;
};

/// A generated corpus together with the facets each tweet was built to carry.
struct AnnotatedCorpus {
    Corpus corpus;
    std::vector<std::vector<TweetSyntax>> intended;        // [trend][tweet]
    std::vector<std::vector<std::size_t>> intended_topic_uses;  // [trend][tweet]
};

AnnotatedCorpus generate_annotated_corpus(const ProfileSet& profiles, const SynthOptions& options);

/// Labeled corpus, classes interleaved, deterministic under the seed.
Corpus generate_synthetic_corpus(const ProfileSet& profiles, const SynthOptions& options);

} // namespace trendclass
