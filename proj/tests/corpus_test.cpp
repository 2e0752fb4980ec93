#include "fixtures.hpp"

#include <trendclass/corpus.hpp>
#include <trendclass/error.hpp>
#include <trendclass/utf8.hpp>

#include <gtest/gtest.h>

#include <random>
#include <sstream>

namespace trendclass {
namespace {

using testing::interpol_trend;
using testing::make_trend;
using testing::tweet;

TEST(ParseTweetSyntax, RetweetChainOfTwo) {
    auto s = parse_tweet_syntax("RT @u2: RT @u1: Interpol issues arrests warrants...");
    EXPECT_EQ(s.retweet_depth, 2u);
    EXPECT_TRUE(s.is_retweet);
    EXPECT_EQ(s.retweeted_users, (std::vector<std::string>{"u2", "u1"}));
    EXPECT_FALSE(s.is_reply);
}

TEST(ParseTweetSyntax, ReplyWithQuestion) {
    auto s = parse_tweet_syntax("@u1 - so Interpol cannot act until...");
    EXPECT_TRUE(s.is_reply);
    EXPECT_EQ(s.retweet_depth, 0u);
    EXPECT_FALSE(s.is_retweet);
    EXPECT_EQ(s.mentioned_users, std::vector<std::string>{"u1"});
    EXPECT_FALSE(s.has_question);

    auto q = parse_tweet_syntax("@u1 - so Interpol cannot act until he & family leave Libya, is that right?");
    EXPECT_TRUE(q.is_reply);
    EXPECT_TRUE(q.has_question);
}

TEST(ParseTweetSyntax, CommemorativeHashtag) {
    auto s = parse_tweet_syntax("happy #worldbookday everyone! what are you reading?");
    EXPECT_EQ(s.hashtags, std::vector<std::string>{"#worldbookday"});
    EXPECT_TRUE(s.has_exclamation);
    EXPECT_TRUE(s.has_question);
    EXPECT_EQ(s.retweet_depth, 0u);
    EXPECT_FALSE(s.is_reply);
}

TEST(ParseTweetSyntax, PlainText) {
    auto s = parse_tweet_syntax("plain text");
    TweetSyntax expected;
    expected.char_length = 10;
    EXPECT_EQ(s, expected);
}

TEST(ParseTweetSyntax, EmptyTextThrows) {
    EXPECT_THROW(parse_tweet_syntax(""), InvalidTweetError);
}

TEST(ParseTweetSyntax, RetweetWithoutColon) {
    auto s = parse_tweet_syntax("RT @alice great stuff");
    EXPECT_EQ(s.retweet_depth, 1u);
    EXPECT_EQ(s.retweeted_users, std::vector<std::string>{"alice"});
}

TEST(ParseTweetSyntax, UsernameLongerThanFifteenIsNotAChainLink) {
    auto s = parse_tweet_syntax("RT @abcdefghijklmnop: text");
    EXPECT_EQ(s.retweet_depth, 0u);
}

TEST(ParseTweetSyntax, RtInsideTextIsNotAChainLink) {
    auto s = parse_tweet_syntax("great RT @u1: text");
    EXPECT_EQ(s.retweet_depth, 0u);
    EXPECT_FALSE(s.is_reply);
    EXPECT_EQ(s.mentioned_users, std::vector<std::string>{"u1"});
}

TEST(ParseTweetSyntax, HashtagsLowercasedAndStopAtPunctuation) {
    auto s = parse_tweet_syntax("#Libya and #CharlieSheen, #win!");
    EXPECT_EQ(s.hashtags, (std::vector<std::string>{"#libya", "#charliesheen", "#win"}));
}

TEST(ParseTweetSyntax, LinksCountedBySchemePrefix) {
    auto s = parse_tweet_syntax("see http://a.b and https://c.d/e?x=1 or ftp://z");
    EXPECT_EQ(s.link_count, 2u);
    EXPECT_TRUE(s.has_question);  // signs inside URLs count
}

TEST(ParseTweetSyntax, LeadingSpacesBeforeReply) {
    EXPECT_TRUE(parse_tweet_syntax("   @bob hi").is_reply);
    EXPECT_FALSE(parse_tweet_syntax("@ bob hi").is_reply);
}

TEST(ParseTweetSyntax, CharLengthCountsCodePoints) {
    auto s = parse_tweet_syntax("caf\xC3\xA9 \xF0\x9F\x8E\x89");
    EXPECT_EQ(s.char_length, 6u);
}

TEST(TopicOccurrences, Examples) {
    EXPECT_EQ(topic_occurrences("Anfield anfield ANFIELD", "Anfield"), 3u);
    EXPECT_EQ(topic_occurrences("no match here", "Anfield"), 0u);
    EXPECT_EQ(topic_occurrences("aaaa", "aa"), 2u);
    EXPECT_EQ(topic_occurrences("aaa", "aa"), 1u);
    EXPECT_EQ(topic_occurrences("#Libya in LIBYA", "libya"), 2u);
}

TEST(StripRetweetChain, RemovesEveryLink) {
    EXPECT_EQ(strip_retweet_chain("RT @u2: RT @u1: hello"), "hello");
    EXPECT_EQ(strip_retweet_chain("hello RT @u1: x"), "hello RT @u1: x");
}

TEST(ValidateTweet, Limits) {
    EXPECT_NO_THROW(validate_tweet(tweet(std::string(280, 'a'))));
    EXPECT_THROW(validate_tweet(tweet(std::string(281, 'a'))), InvalidTweetError);
    EXPECT_THROW(validate_tweet(tweet("")), InvalidTweetError);
    EXPECT_THROW(validate_tweet(tweet("x", -1)), InvalidTweetError);
    std::string wide;
    for (int i = 0; i < 280; ++i) wide += "\xC3\xA9";
    EXPECT_NO_THROW(validate_tweet(tweet(wide)));
}

TEST(TrendingTopic, TimeSpan) {
    auto t = make_trend("x", {tweet("a", 50), tweet("b", 10), tweet("c", 30)});
    EXPECT_EQ(t.earliest(), 10);
    EXPECT_EQ(t.latest(), 50);
    TrendingTopic empty;
    EXPECT_THROW(empty.earliest(), EmptyTrendError);
}

TEST(LoadCorpus, OneLineTwoTweets) {
    std::istringstream in(
        R"({"topic":"Anfield","label":"ongoing_event","tweets":[{"text":"a","timestamp":1,"user":"x","lang":"en"},)"
        R"({"text":"b","timestamp":2,"user":"y","lang":""}]})"
        "\n");
    auto c = load_corpus(in);
    ASSERT_EQ(c.size(), 1u);
    EXPECT_EQ(c.trends[0].topic, "Anfield");
    EXPECT_EQ(c.trends[0].label, TrendClass::OngoingEvent);
    ASSERT_EQ(c.trends[0].size(), 2u);
    EXPECT_EQ(c.trends[0].tweets[1], tweet("b", 2, "y", ""));
}

TEST(LoadCorpus, MissingTopicReportsLine) {
    std::istringstream in(
        R"({"topic":"a","tweets":[{"text":"a","timestamp":1,"user":"x","lang":"en"}]})"
        "\n\n"
        R"({"tweets":[{"text":"a","timestamp":1,"user":"x","lang":"en"}]})"
        "\n");
    try {
        load_corpus(in);
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 3u);
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
    }
}

TEST(LoadCorpus, MalformedJson) {
    std::istringstream in("{not json\n");
    EXPECT_THROW(load_corpus(in), ParseError);
}

TEST(LoadCorpus, DuplicateTopic) {
    std::istringstream in(
        R"({"topic":"a","tweets":[{"text":"a","timestamp":1,"user":"x","lang":"en"}]})"
        "\n"
        R"({"topic":"a","tweets":[{"text":"b","timestamp":1,"user":"x","lang":"en"}]})"
        "\n");
    EXPECT_THROW(load_corpus(in), DuplicateTopicError);
}

TEST(LoadCorpus, UnknownLabel) {
    std::istringstream in(
        R"({"topic":"a","label":"sports","tweets":[{"text":"a","timestamp":1,"user":"x","lang":"en"}]})"
        "\n");
    EXPECT_THROW(load_corpus(in), UnknownLabelError);
}

TEST(LoadCorpus, EmptyTweetListRejected) {
    std::istringstream in(R"({"topic":"a","tweets":[]})"
                          "\n");
    EXPECT_THROW(load_corpus(in), ParseError);
}

TEST(SaveCorpus, EmptyCorpusIsZeroLines) {
    std::ostringstream out;
    save_corpus(Corpus{}, out);
    EXPECT_EQ(out.str(), "");
    std::istringstream in(out.str());
    EXPECT_EQ(load_corpus(in), Corpus{});
}

TEST(SaveCorpus, SingleTrendRoundTrip) {
    Corpus c{{interpol_trend()}};
    std::ostringstream out;
    save_corpus(c, out);
    const auto text = out.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1);
    std::istringstream in(text);
    EXPECT_EQ(load_corpus(in), c);
}

TEST(SaveCorpus, UnicodeBytesPreserved) {
    const std::string s = "\xC2\xA1" "Feliz d\xC3\xAD" "a! \xE6\x97\xA5\xE6\x9C\xAC \xF0\x9F\x8E\x82 \"quoted\"\\";
    Corpus c{{make_trend("d\xC3\xAD" "a", {tweet(s, 7, "us\xC3\xA9r", "es")}, TrendClass::Commemorative)}};
    std::ostringstream out;
    save_corpus(c, out);
    std::istringstream in(out.str());
    auto back = load_corpus(in);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back.trends[0].tweets[0].text, s);
    EXPECT_EQ(back, c);
}

// Random texts assembled from syntax fragments.
std::string random_text(std::mt19937_64& rng) {
    static const std::vector<std::string> parts = {
        "RT @a1: ", "RT @b_2 ", "@c3 ", "hello ", "#Tag ", "http://x.y/z ", "! ", "? ", "\xC3\xA9t\xC3\xA9 ",
        "RT ", "@", "#", "word ", "RT @toolongusername12345: ",
    };
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    std::uniform_int_distribution<int> len(1, 8);
    std::string s;
    for (int i = len(rng); i > 0; --i) s += parts[pick(rng)];
    return s;
}

TEST(ParseTweetSyntaxProperty, StrippingChainLeavesDepthZero) {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        auto text = random_text(rng);
        auto residual = strip_retweet_chain(text);
        if (residual.empty()) continue;
        EXPECT_EQ(parse_tweet_syntax(residual).retweet_depth, 0u) << text;
    }
}

TEST(ParseTweetSyntaxProperty, StructuralInvariants) {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
        auto text = random_text(rng);
        auto s = parse_tweet_syntax(text);
        EXPECT_EQ(s.is_retweet, s.retweet_depth >= 1) << text;
        EXPECT_EQ(s.retweeted_users.size(), s.retweet_depth) << text;
        EXPECT_FALSE(s.is_reply && s.is_retweet) << text;
        if (s.is_reply) {
            auto first = text.find_first_not_of(' ');
            EXPECT_EQ(text[first], '@') << text;
        }
        EXPECT_EQ(s.char_length, utf8::code_point_count(text)) << text;
    }
}

TEST(TopicOccurrencesProperty, BoundedByLengthRatio) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> ch('a', 'c');
    std::uniform_int_distribution<int> len(0, 20);
    for (int i = 0; i < 2000; ++i) {
        std::string t, s;
        for (int k = len(rng); k > 0; --k) t += static_cast<char>(ch(rng));
        for (int k = 1 + len(rng) % 3; k > 0; --k) s += static_cast<char>(ch(rng));
        EXPECT_LE(topic_occurrences(t, s), t.size() / s.size());
    }
}

TEST(CorpusProperty, RandomRoundTrip) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> n_tweets(1, 5);
    std::uniform_int_distribution<std::int64_t> ts(0, 2'000'000'000);
    for (int rep = 0; rep < 20; ++rep) {
        Corpus c;
        for (int t = 0; t < 5; ++t) {
            TrendingTopic trend;
            trend.topic = "topic " + std::to_string(rep) + "/" + std::to_string(t);
            if (t % 2 == 0) trend.label = kAllClasses[static_cast<std::size_t>(t + rep) % kClassCount];
            for (int k = n_tweets(rng); k > 0; --k) {
                trend.tweets.push_back(tweet(random_text(rng), ts(rng), "user" + std::to_string(k),
                                             k % 3 == 0 ? "" : "pt"));
            }
            c.trends.push_back(trend);
        }
        std::ostringstream out;
        save_corpus(c, out);
        std::istringstream in(out.str());
        EXPECT_EQ(load_corpus(in), c);
    }
}

} // namespace
} // namespace trendclass
