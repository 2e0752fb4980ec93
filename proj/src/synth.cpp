#include "trendclass/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string_view>

#include "trendclass/error.hpp"
#include "trendclass/utf8.hpp"

namespace trendclass {

namespace {

// All draws go through this wrapper instead of <random> distributions, whose
// algorithms differ between standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    double uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(const Interval& i) noexcept { return i.lo + (i.hi - i.lo) * uniform(); }
    std::size_t below(std::size_t n) noexcept { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }
    bool chance(double p) noexcept { return uniform() < p; }

    double normal() noexcept {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
    }

    double exponential(double mean) noexcept { return -mean * std::log(1.0 - uniform()); }

    std::size_t poisson(double mean) noexcept {
        const double limit = std::exp(-mean);
        std::size_t k = 0;
        for (double p = uniform(); p > limit; p *= uniform()) ++k;
        return k;
    }

private:
    std::uint64_t state_;
};

/// Rank sampler with P(k) proportional to 1/(k+1)^skew.
class ZipfSampler {
public:
    ZipfSampler(std::size_t size, double skew) : cumulative_(size) {
        double total = 0.0;
        for (std::size_t k = 0; k < size; ++k) {
            total += std::pow(static_cast<double>(k + 1), -skew);
            cumulative_[k] = total;
        }
        for (double& c : cumulative_) c /= total;
    }

    std::size_t operator()(Rng& rng) const noexcept {
        const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), rng.uniform());
        return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()), cumulative_.size() - 1);
    }

private:
    std::vector<double> cumulative_;
};

constexpr std::array<std::string_view, 14> kLanguages = {"en", "es", "pt", "nl", "fr", "de", "it",
                                                         "ja", "id", "tr", "ko", "ar", "ru", "ms"};

// Pseudo-words avoid 'q' and 'x' so they can never contain a topic, which
// always starts with "qx".
constexpr std::string_view kConsonants = "bcdfghjklmnprstvwz";
constexpr std::string_view kVowels = "aeiou";
constexpr std::string_view kLinkAlphabet = "abcdefghijkmnoprstuvwyzABCDEFGHJKLMNPRSTUVWYZ23456789";

constexpr std::size_t kGlobalWordCount = 6000;
constexpr std::size_t kMaxOriginalLength = 190;
constexpr std::size_t kMaxTopicUses = 4;
constexpr std::size_t kMaxHashtags = 4;
constexpr std::size_t kMaxLinks = 2;
constexpr std::int64_t kEpochStart = 1'300'000'000;

std::string pseudo_word(std::uint64_t key, std::size_t syllables) {
    Rng rng(key);
    std::string w;
    for (std::size_t s = 0; s < syllables; ++s) {
        w += kConsonants[rng.below(kConsonants.size())];
        w += kVowels[rng.below(kVowels.size())];
        if (rng.chance(0.3)) w += kConsonants[rng.below(kConsonants.size())];
    }
    return w;
}

const std::vector<std::string>& global_words() {
    static const std::vector<std::string> words = [] {
        std::vector<std::string> out;
        out.reserve(kGlobalWordCount);
        for (std::size_t i = 0; i < kGlobalWordCount; ++i) out.push_back(pseudo_word(0xC0FFEEull * (i + 1), 1 + i % 3));
        return out;
    }();
    return words;
}

std::uint64_t mix(std::uint64_t a, std::uint64_t b) noexcept {
    Rng r(a ^ (b * 0xD1B54A32D192ED03ull));
    return r.next();
}

void check_probability(double p, const char* field) {
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgumentError(std::string("profile field ") + field + " must lie in [0, 1]");
}

void check_interval(const Interval& i, const char* field, double min, double max) {
    if (!std::isfinite(i.lo) || !std::isfinite(i.hi) || i.lo > i.hi || i.lo < min || i.hi > max) {
        throw InvalidArgumentError(std::string("profile field ") + field + " is not a valid range within [" +
                                   std::to_string(min) + ", " + std::to_string(max) + "]");
    }
}

void check_pool(const PoolSpec& p, const char* field) {
    if (p.size < 1) throw InvalidArgumentError(std::string("profile field ") + field + ".size must be at least 1");
    if (!(p.skew >= 0.0) || !std::isfinite(p.skew)) {
        throw InvalidArgumentError(std::string("profile field ") + field + ".skew must be non-negative");
    }
}

/// Parameters fixed for one trend.
struct TrendPlan {
    double retweet_probability;
    double hashtag_rate;
    double length_mean;
    double exclamation_probability;
    double question_probability;
    double link_rate;
    double topic_repetition;
    double reply_probability;
    double mean_gap;
    std::vector<std::string> users;
    std::vector<std::string> retweeted_users;
    std::vector<std::string> hashtags;
    std::vector<std::string_view> languages;
    std::size_t word_offset;
    std::size_t word_stride;
};

struct Original {
    std::string text;
    std::string language;
    TweetSyntax syntax;
    std::size_t topic_uses;
};

class TrendBuilder {
public:
    TrendBuilder(const ClassProfile& profile, std::size_t trend_index, std::uint64_t seed)
        : profile_(profile),
          rng_(mix(seed, trend_index)),
          users_(profile.users.size, profile.users.skew),
          retweeted_(profile.retweeted_users.size, profile.retweeted_users.skew),
          hashtags_(profile.hashtags.size, profile.hashtags.skew),
          languages_(std::min(profile.languages.size, kLanguages.size()), profile.languages.skew),
          words_(profile.vocabulary.size, profile.vocabulary.skew),
          signature_(std::max<std::size_t>(profile.signature_terms.size(), 1), 1.0),
          trend_index_(trend_index) {
        plan_.retweet_probability = rng_.uniform(profile.retweet_probability);
        plan_.hashtag_rate = rng_.uniform(profile.hashtag_rate);
        plan_.length_mean = rng_.uniform(profile.length_mean);
        plan_.exclamation_probability = rng_.uniform(profile.exclamation_probability);
        plan_.question_probability = rng_.uniform(profile.question_probability);
        plan_.link_rate = rng_.uniform(profile.link_rate);
        plan_.topic_repetition = rng_.uniform(profile.topic_repetition);
        plan_.reply_probability = rng_.uniform(profile.reply_probability);
        plan_.mean_gap = rng_.uniform(profile.mean_gap_seconds);

        const auto key = rng_.next();
        for (std::size_t k = 0; k < profile.users.size; ++k) {
            plan_.users.push_back(pseudo_word(mix(key, k), 2).substr(0, 8) + "_" + std::to_string(k));
        }
        for (std::size_t k = 0; k < profile.retweeted_users.size; ++k) {
            plan_.retweeted_users.push_back(pseudo_word(mix(key + 1, k), 2).substr(0, 8) + std::to_string(k));
        }
        for (std::size_t k = 0; k < profile.hashtags.size; ++k) {
            plan_.hashtags.push_back(pseudo_word(mix(key + 2, k), 3));
        }
        const auto language_offset = rng_.below(kLanguages.size());
        for (std::size_t k = 0; k < kLanguages.size(); ++k) {
            plan_.languages.push_back(kLanguages[(language_offset + k) % kLanguages.size()]);
        }
        plan_.word_offset = rng_.below(kGlobalWordCount);
        plan_.word_stride = 1 + 2 * rng_.below(kGlobalWordCount / 2);  // odd
        while (std::gcd(plan_.word_stride, kGlobalWordCount) != 1) plan_.word_stride += 2;

        topic_ = "Qx" + capitalized(pseudo_word(mix(key + 3, 0), 2)) + std::to_string(trend_index);
    }

    void build(std::size_t tweet_count, TrendingTopic& trend, std::vector<TweetSyntax>& intended,
               std::vector<std::size_t>& topic_uses) {
        trend.topic = topic_;
        std::int64_t clock = kEpochStart + static_cast<std::int64_t>(trend_index_) * 86'400;
        for (std::size_t i = 0; i < tweet_count; ++i) {
            if (i > 0) clock += static_cast<std::int64_t>(std::floor(rng_.exponential(plan_.mean_gap)));
            Tweet tweet;
            tweet.timestamp = clock;
            tweet.user = plan_.users[users_(rng_)];

            if (!originals_.empty() && rng_.chance(plan_.retweet_probability)) {
                // Early originals collect most retweets: index = n * u^2.
                const double u = rng_.uniform();
                const auto pick = std::min(originals_.size() - 1,
                                           static_cast<std::size_t>(static_cast<double>(originals_.size()) * u * u));
                const auto& source = originals_[pick];
                auto [text, syntax] = retweet_of(source);
                tweet.text = std::move(text);
                tweet.language = source.language;
                intended.push_back(std::move(syntax));
                topic_uses.push_back(source.topic_uses);
            } else {
                auto original = make_original();
                tweet.text = original.text;
                tweet.language = original.language;
                intended.push_back(original.syntax);
                topic_uses.push_back(original.topic_uses);
                originals_.push_back(std::move(original));
            }
            trend.tweets.push_back(std::move(tweet));
        }
    }

private:
    static std::string capitalized(std::string w) {
        if (!w.empty()) w[0] = static_cast<char>(w[0] - 'a' + 'A');
        return w;
    }

    std::string draw_word() {
        if (!profile_.signature_terms.empty() && rng_.chance(profile_.signature_rate)) {
            return profile_.signature_terms[signature_(rng_) % profile_.signature_terms.size()];
        }
        const auto rank = words_(rng_);
        return global_words()[(plan_.word_offset + rank * plan_.word_stride) % kGlobalWordCount];
    }

    std::string draw_link() {
        std::string link = rng_.chance(0.5) ? "http://t.co/" : "https://bit.ly/";
        for (int k = 0; k < 7; ++k) link += kLinkAlphabet[rng_.below(kLinkAlphabet.size())];
        return link;
    }

    Original make_original() {
        Original o;
        o.language = std::string(plan_.languages[languages_(rng_)]);

        const double jittered = plan_.length_mean * (1.0 + profile_.length_jitter * rng_.normal());
        const auto target = static_cast<std::size_t>(std::clamp(jittered, 12.0, static_cast<double>(kMaxOriginalLength)));

        std::vector<std::string> tokens;
        o.topic_uses = std::min(kMaxTopicUses, 1 + rng_.poisson(std::max(plan_.topic_repetition - 1.0, 0.0)));
        for (std::size_t k = 0; k < o.topic_uses; ++k) tokens.push_back(topic_);
        const auto hashtag_count = std::min(kMaxHashtags, rng_.poisson(plan_.hashtag_rate));
        for (std::size_t k = 0; k < hashtag_count; ++k) {
            const auto& tag = plan_.hashtags[hashtags_(rng_)];
            tokens.push_back("#" + tag);
            o.syntax.hashtags.push_back("#" + tag);
        }

        std::size_t length = 0;
        for (const auto& t : tokens) length += t.size() + 1;
        std::size_t reply_length = 0;
        std::string reply_to;
        if (rng_.chance(plan_.reply_probability)) {
            reply_to = plan_.users[users_(rng_)];
            reply_length = reply_to.size() + 2;
        }
        const auto link_count = std::min(kMaxLinks, rng_.poisson(plan_.link_rate));
        length += reply_length + link_count * 23;
        while (length < target) {
            auto w = draw_word();
            length += w.size() + 1;
            tokens.push_back(std::move(w));
        }
        // Shuffle so topic and hashtags land anywhere in the sentence.
        for (std::size_t k = tokens.size(); k > 1; --k) std::swap(tokens[k - 1], tokens[rng_.below(k)]);

        o.syntax.has_exclamation = rng_.chance(plan_.exclamation_probability);
        if (o.syntax.has_exclamation) tokens[rng_.below(tokens.size())] += "!";

        std::string text;
        if (!reply_to.empty()) {
            text = "@" + reply_to + " ";
            o.syntax.is_reply = true;
            o.syntax.mentioned_users.push_back(reply_to);
        }
        for (std::size_t k = 0; k < tokens.size(); ++k) {
            if (k > 0) text += ' ';
            text += tokens[k];
        }
        o.syntax.has_question = rng_.chance(plan_.question_probability);
        if (o.syntax.has_question) text += "?";
        for (std::size_t k = 0; k < link_count; ++k) text += " " + draw_link();
        o.syntax.link_count = link_count;

        // Hashtags were recorded in draw order; the parser reports text order.
        o.syntax.hashtags.clear();
        for (const auto& t : tokens) {
            if (t.starts_with('#')) o.syntax.hashtags.push_back(t.ends_with('!') ? t.substr(0, t.size() - 1) : t);
        }
        o.syntax.char_length = utf8::code_point_count(text);
        o.text = std::move(text);
        return o;
    }

    std::pair<std::string, TweetSyntax> retweet_of(const Original& source) {
        std::size_t depth = 1;
        while (depth < profile_.max_retweet_depth && rng_.chance(profile_.deeper_retweet_probability)) ++depth;

        std::vector<std::string> chain;
        std::size_t length = source.syntax.char_length;
        for (std::size_t k = 0; k < depth; ++k) {
            const auto& user = plan_.retweeted_users[retweeted_(rng_)];
            const std::size_t link_length = user.size() + 6;  // "RT @" + user + ": "
            if (length + link_length > kMaxTweetLength) break;
            length += link_length;
            chain.push_back(user);
        }
        TweetSyntax syntax = source.syntax;
        if (chain.empty()) return {source.text, syntax};  // too long to wrap: reposted as-is

        std::string text;
        for (const auto& user : chain) text += "RT @" + user + ": ";
        text += source.text;
        syntax.retweet_depth = chain.size();
        syntax.is_retweet = true;
        syntax.retweeted_users = std::move(chain);
        syntax.is_reply = false;
        syntax.char_length = utf8::code_point_count(text);
        return {std::move(text), std::move(syntax)};
    }

    const ClassProfile& profile_;
    Rng rng_;
    ZipfSampler users_;
    ZipfSampler retweeted_;
    ZipfSampler hashtags_;
    ZipfSampler languages_;
    ZipfSampler words_;
    ZipfSampler signature_;
    std::size_t trend_index_;
    TrendPlan plan_{};
    std::string topic_;
    std::vector<Original> originals_;
};

} // namespace

void validate_profile(const ClassProfile& p) {
    check_interval(p.retweet_probability, "retweet_probability", 0.0, 1.0);
    check_probability(p.deeper_retweet_probability, "deeper_retweet_probability");
    if (p.max_retweet_depth < 1) throw InvalidArgumentError("profile field max_retweet_depth must be at least 1");
    check_interval(p.hashtag_rate, "hashtag_rate", 0.0, 50.0);
    check_interval(p.length_mean, "length_mean", 1.0, static_cast<double>(kMaxOriginalLength));
    if (!(p.length_jitter >= 0.0 && p.length_jitter <= 1.0)) {
        throw InvalidArgumentError("profile field length_jitter must lie in [0, 1]");
    }
    check_interval(p.exclamation_probability, "exclamation_probability", 0.0, 1.0);
    check_interval(p.question_probability, "question_probability", 0.0, 1.0);
    check_interval(p.link_rate, "link_rate", 0.0, 50.0);
    check_interval(p.topic_repetition, "topic_repetition", 1.0, 50.0);
    check_interval(p.reply_probability, "reply_probability", 0.0, 1.0);
    check_interval(p.mean_gap_seconds, "mean_gap_seconds", 1e-3, 1e6);
    check_pool(p.users, "users");
    check_pool(p.retweeted_users, "retweeted_users");
    check_pool(p.hashtags, "hashtags");
    check_pool(p.languages, "languages");
    check_pool(p.vocabulary, "vocabulary");
    if (p.vocabulary.size > kGlobalWordCount) {
        throw InvalidArgumentError("profile field vocabulary.size exceeds " + std::to_string(kGlobalWordCount));
    }
    check_probability(p.signature_rate, "signature_rate");
    if (p.signature_rate > 0.0 && p.signature_terms.empty()) {
        throw InvalidArgumentError("profile field signature_terms is empty but signature_rate > 0");
    }
    for (const auto& t : p.signature_terms) {
        const bool bad = t.empty() || t.find_first_of(" \t\n#@!?") != std::string::npos ||
                         utf8::to_lower(t).find("qx") != std::string::npos || t.starts_with("http");
        if (bad) throw InvalidArgumentError("profile field signature_terms holds an unusable term \"" + t + "\"");
    }
}

const ProfileSet& default_profiles() {
    static const ProfileSet profiles = [] {
        ProfileSet set;

        auto& news = set[index_of(TrendClass::News)];
        news.retweet_probability = {0.28, 0.48};
        news.deeper_retweet_probability = 0.25;
        news.hashtag_rate = {0.3, 0.7};
        news.length_mean = {100, 135};
        news.exclamation_probability = {0.22, 0.40};
        news.question_probability = {0.02, 0.07};
        news.link_rate = {0.30, 0.60};
        news.topic_repetition = {1.0, 1.3};
        news.reply_probability = {0.04, 0.10};
        news.mean_gap_seconds = {1.5, 4.0};
        news.users = {160, 1.0};
        news.retweeted_users = {14, 0.9};
        news.hashtags = {10, 1.0};
        news.languages = {3, 1.8};
        news.vocabulary = {2400, 0.75};
        news.signature_terms = {"news", "breaking", "report", "officials", "says", "minister", "police",
                                "fired", "killed", "confirmed", "announced", "government"};
        news.signature_rate = 0.10;

        auto& ongoing = set[index_of(TrendClass::OngoingEvent)];
        ongoing.retweet_probability = {0.08, 0.24};
        ongoing.deeper_retweet_probability = 0.12;
        ongoing.hashtag_rate = {0.4, 0.8};
        ongoing.length_mean = {42, 68};
        ongoing.exclamation_probability = {0.08, 0.20};
        ongoing.question_probability = {0.05, 0.12};
        ongoing.link_rate = {0.03, 0.15};
        ongoing.topic_repetition = {1.0, 1.3};
        ongoing.reply_probability = {0.10, 0.20};
        ongoing.mean_gap_seconds = {0.4, 1.5};
        ongoing.users = {180, 0.9};
        ongoing.retweeted_users = {30, 0.6};
        ongoing.hashtags = {8, 1.0};
        ongoing.languages = {9, 0.5};
        ongoing.vocabulary = {900, 1.0};
        ongoing.signature_terms = {"watching", "live", "tonight", "game", "tv", "watch",
                                   "goal", "show", "now", "time", "idol", "good"};
        ongoing.signature_rate = 0.12;

        auto& meme = set[index_of(TrendClass::Meme)];
        meme.retweet_probability = {0.55, 0.80};
        meme.deeper_retweet_probability = 0.40;
        meme.hashtag_rate = {0.7, 1.2};
        meme.length_mean = {80, 115};
        meme.exclamation_probability = {0.08, 0.20};
        meme.question_probability = {0.05, 0.12};
        meme.link_rate = {0.40, 0.80};
        meme.topic_repetition = {1.0, 1.3};
        meme.reply_probability = {0.02, 0.07};
        meme.mean_gap_seconds = {0.7, 3.0};
        meme.users = {160, 1.0};
        meme.retweeted_users = {4, 1.6};
        meme.hashtags = {8, 1.2};
        meme.languages = {2, 3.0};
        meme.vocabulary = {800, 1.2};
        meme.signature_terms = {"lol", "love", "twitter", "video", "winning", "lmao", "funny", "boy", "great", "movie"};
        meme.signature_rate = 0.12;

        auto& commemorative = set[index_of(TrendClass::Commemorative)];
        commemorative.retweet_probability = {0.15, 0.35};
        commemorative.deeper_retweet_probability = 0.15;
        commemorative.hashtag_rate = {1.0, 1.6};
        commemorative.length_mean = {85, 120};
        commemorative.exclamation_probability = {0.12, 0.28};
        commemorative.question_probability = {0.15, 0.30};
        commemorative.link_rate = {0.05, 0.20};
        commemorative.topic_repetition = {1.6, 2.4};
        commemorative.reply_probability = {0.05, 0.14};
        commemorative.mean_gap_seconds = {2.0, 5.0};
        commemorative.users = {150, 1.0};
        commemorative.retweeted_users = {25, 0.7};
        commemorative.hashtags = {6, 1.0};
        commemorative.languages = {4, 1.2};
        commemorative.vocabulary = {1000, 1.0};
        commemorative.signature_terms = {"happy", "birthday", "day", "anniversary", "anos", "remember",
                                         "years", "congrats", "celebrate", "memorial"};
        commemorative.signature_rate = 0.15;

        for (const auto& p : set) validate_profile(p);
        return set;
    }();
    return profiles;
}

AnnotatedCorpus generate_annotated_corpus(const ProfileSet& profiles, const SynthOptions& options) {
    for (const auto& p : profiles) validate_profile(p);
    if (options.tweets_per_trend < 1) throw InvalidArgumentError("tweets_per_trend must be at least 1");

    AnnotatedCorpus out;
    const std::size_t total = options.trends_per_class * kClassCount;
    out.corpus.trends.resize(total);
    out.intended.resize(total);
    out.intended_topic_uses.resize(total);
    for (std::size_t i = 0; i < total; ++i) {
        const auto label = kAllClasses[i % kClassCount];
        TrendBuilder builder(profiles[index_of(label)], i, options.seed);
        auto& trend = out.corpus.trends[i];
        trend.label = label;
        trend.tweets.reserve(options.tweets_per_trend);
        builder.build(options.tweets_per_trend, trend, out.intended[i], out.intended_topic_uses[i]);
    }
    return out;
}

Corpus generate_synthetic_corpus(const ProfileSet& profiles, const SynthOptions& options) {
    return std::move(generate_annotated_corpus(profiles, options).corpus);
}

} // namespace trendclass
