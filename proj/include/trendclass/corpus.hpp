#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "trendclass/label.hpp"

namespace trendclass {

inline constexpr std::size_t kMaxTweetLength = 280;
inline constexpr std::size_t kMaxUsernameLength = 15;

struct Tweet {
    std::string text;
    std::int64_t timestamp = 0;  // epoch seconds
    std::string user;
    std::string language;  // lowercase ISO-639-1, may be empty

    bool operator==(const Tweet&) const = default;
};

/// Microblog facets recovered from the raw text of a single tweet.
struct TweetSyntax {
    std::size_t retweet_depth = 0;
    bool is_retweet = false;
    std::vector<std::string> retweeted_users;  // outermost first
    std::vector<std::string> mentioned_users;  // mentions after the RT chain
    bool is_reply = false;
    std::vector<std::string> hashtags;  // lowercased, with leading '#'
    std::size_t link_count = 0;
    bool has_exclamation = false;
    bool has_question = false;
    std::size_t char_length = 0;  // code points

    bool operator==(const TweetSyntax&) const = default;
};

struct TrendingTopic {
    std::string topic;
    std::vector<Tweet> tweets;
    std::optional<TrendClass> label;

    std::size_t size() const noexcept { return tweets.size(); }
    std::int64_t earliest() const;
    std::int64_t latest() const;

    bool operator==(const TrendingTopic&) const = default;
};

struct Corpus {
    std::vector<TrendingTopic> trends;

    std::size_t size() const noexcept { return trends.size(); }
    bool operator==(const Corpus&) const = default;
};

/// Parses retweet chain, reply position, mentions, hashtags, links and
/// punctuation. Throws InvalidTweetError on empty text.
TweetSyntax parse_tweet_syntax(std::string_view text);

/// Non-overlapping, case-insensitive occurrences of `topic` in `text`.
std::size_t topic_occurrences(std::string_view text, std::string_view topic);

/// Returns the text with every leading RT chain link removed.
std::string_view strip_retweet_chain(std::string_view text);

/// Checks tweet-level invariants (non-empty text of at most 280 code points,
/// non-negative timestamp). Throws InvalidTweetError.
void validate_tweet(const Tweet& tweet);

/// Reads one JSON object per line. Blank lines are skipped.
/// Throws ParseError (with line number), DuplicateTopicError or UnknownLabelError.
Corpus load_corpus(std::istream& in);
Corpus load_corpus_file(const std::string& path);

void save_corpus(const Corpus& corpus, std::ostream& out);
void save_corpus_file(const Corpus& corpus, const std::string& path);

} // namespace trendclass
