#include "trendclass/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "trendclass/error.hpp"
#include "trendclass/utf8.hpp"

namespace trendclass {

namespace {

bool is_username_char(char c) noexcept {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

/// Length of the run of username characters starting at pos.
std::size_t username_run(std::string_view text, std::size_t pos) noexcept {
    std::size_t n = 0;
    while (pos + n < text.size() && is_username_char(text[pos + n])) ++n;
    return n;
}

/// Matches one `RT @user:` / `RT @user ` link at pos. On success returns the
/// username and advances pos past the link and any following spaces.
std::optional<std::string_view> match_retweet_link(std::string_view text, std::size_t& pos) {
    std::size_t p = pos;
    while (p < text.size() && is_space(text[p])) ++p;
    if (text.substr(p, 4) != "RT @") return std::nullopt;
    p += 4;
    const std::size_t n = username_run(text, p);
    if (n == 0 || n > kMaxUsernameLength) return std::nullopt;
    const std::size_t end = p + n;
    if (end >= text.size() || (text[end] != ':' && text[end] != ' ')) return std::nullopt;
    auto user = text.substr(p, n);
    p = end + 1;
    while (p < text.size() && is_space(text[p])) ++p;
    pos = p;
    return user;
}

/// A '@' or '#' marker starts a token only when not glued to a preceding word.
bool at_token_start(std::string_view text, std::size_t pos) noexcept {
    return pos == 0 || !is_username_char(text[pos - 1]);
}

std::size_t count_substring(std::string_view haystack, std::string_view needle) noexcept {
    std::size_t n = 0;
    for (std::size_t pos = haystack.find(needle); pos != std::string_view::npos;
         pos = haystack.find(needle, pos + needle.size())) {
        ++n;
    }
    return n;
}

} // namespace

std::int64_t TrendingTopic::earliest() const {
    if (tweets.empty()) throw EmptyTrendError();
    return std::min_element(tweets.begin(), tweets.end(),
                            [](const Tweet& a, const Tweet& b) { return a.timestamp < b.timestamp; })
        ->timestamp;
}

std::int64_t TrendingTopic::latest() const {
    if (tweets.empty()) throw EmptyTrendError();
    return std::max_element(tweets.begin(), tweets.end(),
                            [](const Tweet& a, const Tweet& b) { return a.timestamp < b.timestamp; })
        ->timestamp;
}

std::string_view strip_retweet_chain(std::string_view text) {
    std::size_t pos = 0;
    std::size_t last = 0;
    while (match_retweet_link(text, pos)) last = pos;
    return text.substr(last);
}

TweetSyntax parse_tweet_syntax(std::string_view text) {
    if (text.empty()) throw InvalidTweetError("tweet text is empty");

    TweetSyntax syntax;
    syntax.char_length = utf8::code_point_count(text);

    std::size_t pos = 0;
    while (auto user = match_retweet_link(text, pos)) syntax.retweeted_users.emplace_back(*user);
    syntax.retweet_depth = syntax.retweeted_users.size();
    syntax.is_retweet = syntax.retweet_depth > 0;
    const std::size_t body_start = syntax.is_retweet ? pos : 0;

    const auto first = text.find_first_not_of(" \t\n\r\f\v");
    syntax.is_reply = first != std::string_view::npos && text[first] == '@' &&
                      username_run(text, first + 1) > 0;

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '!') {
            syntax.has_exclamation = true;
        } else if (c == '?') {
            syntax.has_question = true;
        } else if (c == '#' && at_token_start(text, i)) {
            const std::size_t n = username_run(text, i + 1);
            if (n > 0) {
                syntax.hashtags.push_back(utf8::to_lower(text.substr(i, n + 1)));
                i += n;
            }
        } else if (c == '@' && i >= body_start && at_token_start(text, i)) {
            const std::size_t n = username_run(text, i + 1);
            if (n > 0 && n <= kMaxUsernameLength) {
                syntax.mentioned_users.emplace_back(text.substr(i + 1, n));
            }
            i += n;
        }
    }
    syntax.link_count = count_substring(text, "http://") + count_substring(text, "https://");
    return syntax;
}

std::size_t topic_occurrences(std::string_view text, std::string_view topic) {
    if (topic.empty()) throw InvalidArgumentError("topic must not be empty");
    return count_substring(utf8::to_lower(text), utf8::to_lower(topic));
}

void validate_tweet(const Tweet& tweet) {
    if (tweet.text.empty()) throw InvalidTweetError("tweet text is empty");
    const auto length = utf8::code_point_count(tweet.text);
    if (length > kMaxTweetLength) {
        throw InvalidTweetError("tweet text has " + std::to_string(length) + " characters (max " +
                                std::to_string(kMaxTweetLength) + ")");
    }
    if (tweet.timestamp < 0) throw InvalidTweetError("negative timestamp");
}

namespace {

using nlohmann::json;

const json& require(const json& obj, const char* key, std::size_t line) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(line, std::string("missing field \"") + key + "\"");
    return *it;
}

std::string require_string(const json& obj, const char* key, std::size_t line) {
    const auto& v = require(obj, key, line);
    if (!v.is_string()) throw ParseError(line, std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

Tweet parse_tweet(const json& obj, std::size_t line) {
    if (!obj.is_object()) throw ParseError(line, "tweet must be an object");
    Tweet tweet;
    tweet.text = require_string(obj, "text", line);
    const auto& ts = require(obj, "timestamp", line);
    if (!ts.is_number_integer()) throw ParseError(line, "field \"timestamp\" must be an integer");
    tweet.timestamp = ts.get<std::int64_t>();
    tweet.user = require_string(obj, "user", line);
    tweet.language = require_string(obj, "lang", line);
    try {
        validate_tweet(tweet);
    } catch (const InvalidTweetError& e) {
        throw ParseError(line, e.what());
    }
    return tweet;
}

TrendingTopic parse_trend(std::string_view text, std::size_t line) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(line, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError(line, "record must be a JSON object");

    TrendingTopic trend;
    trend.topic = require_string(doc, "topic", line);
    if (trend.topic.empty()) throw ParseError(line, "empty topic");

    if (auto it = doc.find("label"); it != doc.end() && !it->is_null()) {
        if (!it->is_string()) throw ParseError(line, "field \"label\" must be a string");
        const auto name = it->get<std::string>();
        trend.label = parse_class(name);
        if (!trend.label) throw UnknownLabelError("line " + std::to_string(line) + ": unknown label \"" + name + "\"");
    }

    const auto& tweets = require(doc, "tweets", line);
    if (!tweets.is_array()) throw ParseError(line, "field \"tweets\" must be an array");
    if (tweets.empty()) throw ParseError(line, "trend has no tweets");
    trend.tweets.reserve(tweets.size());
    for (const auto& t : tweets) trend.tweets.push_back(parse_tweet(t, line));
    return trend;
}

} // namespace

Corpus load_corpus(std::istream& in) {
    Corpus corpus;
    std::unordered_set<std::string> seen;
    std::string text;
    std::size_t line = 0;
    while (std::getline(in, text)) {
        ++line;
        if (!text.empty() && text.back() == '\r') text.pop_back();
        if (text.find_first_not_of(" \t") == std::string::npos) continue;
        auto trend = parse_trend(text, line);
        if (!seen.insert(trend.topic).second) {
            throw DuplicateTopicError("line " + std::to_string(line) + ": duplicate topic \"" + trend.topic + "\"");
        }
        corpus.trends.push_back(std::move(trend));
    }
    if (in.bad()) throw Error("read error after line " + std::to_string(line));
    return corpus;
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return load_corpus(in);
}

void save_corpus(const Corpus& corpus, std::ostream& out) {
    for (const auto& trend : corpus.trends) {
        nlohmann::ordered_json doc;
        doc["topic"] = trend.topic;
        if (trend.label) doc["label"] = std::string(to_string(*trend.label));
        auto& tweets = doc["tweets"] = nlohmann::ordered_json::array();
        for (const auto& t : trend.tweets) {
            tweets.push_back({{"text", t.text}, {"timestamp", t.timestamp}, {"user", t.user}, {"lang", t.language}});
        }
        out << doc.dump() << '\n';
    }
    out.flush();
    if (!out) throw Error("write error while saving corpus");
}

void save_corpus_file(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    save_corpus(corpus, out);
}

} // namespace trendclass
