#include "fixtures.hpp"

#include <trendclass/analysis.hpp>
#include <trendclass/error.hpp>
#include <trendclass/features.hpp>
#include <trendclass/synth.hpp>

#include <gtest/gtest.h>

#include <sstream>

namespace trendclass {
namespace {

using testing::make_trend;
using testing::tweet;

SynthOptions small(std::uint64_t seed = 42) {
    SynthOptions o;
    o.trends_per_class = 6;
    o.tweets_per_trend = 60;
    o.seed = seed;
    return o;
}

TEST(Synth, DeterministicUnderSeed) {
    auto a = generate_synthetic_corpus(default_profiles(), small(5));
    auto b = generate_synthetic_corpus(default_profiles(), small(5));
    EXPECT_EQ(a, b);
    std::ostringstream sa, sb;
    save_corpus(a, sa);
    save_corpus(b, sb);
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_NE(a, generate_synthetic_corpus(default_profiles(), small(6)));
}

TEST(Synth, ShapeAndLabels) {
    auto c = generate_synthetic_corpus(default_profiles(), small());
    ASSERT_EQ(c.size(), 24u);
    std::set<std::string> topics;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& t = c.trends[i];
        EXPECT_EQ(t.label, kAllClasses[i % kClassCount]);
        EXPECT_EQ(t.size(), 60u);
        topics.insert(t.topic);
        for (const auto& tw : t.tweets) EXPECT_NO_THROW(validate_tweet(tw));
    }
    EXPECT_EQ(topics.size(), c.size());
}

TEST(Synth, EveryTweetReparsesToIntent) {
    SynthOptions o;
    o.trends_per_class = 20;
    o.tweets_per_trend = 200;
    o.seed = 8;
    auto a = generate_annotated_corpus(default_profiles(), o);
    std::size_t checked = 0;
    for (std::size_t i = 0; i < a.corpus.size(); ++i) {
        const auto& trend = a.corpus.trends[i];
        ASSERT_EQ(a.intended[i].size(), trend.size());
        for (std::size_t k = 0; k < trend.size(); ++k) {
            const auto& text = trend.tweets[k].text;
            ASSERT_EQ(parse_tweet_syntax(text), a.intended[i][k]) << text;
            ASSERT_EQ(topic_occurrences(text, trend.topic), a.intended_topic_uses[i][k]) << text;
            ++checked;
        }
    }
    EXPECT_EQ(checked, 80u * 200u);
}

TEST(Synth, FacetsActuallyOccur) {
    auto a = generate_annotated_corpus(default_profiles(), small());
    std::size_t retweets = 0, deep = 0, replies = 0, links = 0, hashtags = 0;
    for (const auto& trend : a.intended) {
        for (const auto& s : trend) {
            retweets += s.is_retweet;
            deep += s.retweet_depth >= 2;
            replies += s.is_reply;
            links += s.link_count;
            hashtags += s.hashtags.size();
        }
    }
    EXPECT_GT(retweets, 0u);
    EXPECT_GT(deep, 0u);
    EXPECT_GT(replies, 0u);
    EXPECT_GT(links, 0u);
    EXPECT_GT(hashtags, 0u);
}

TEST(Synth, DefaultMediansFollowClassSignatures) {
    SynthOptions o;
    o.trends_per_class = 50;
    o.tweets_per_trend = 200;
    auto report = analyze_distributions(generate_synthetic_corpus(default_profiles(), o));
    auto median = [&](TrendClass c, SocialFeature f) {
        return report.cells[index_of(c)][static_cast<std::size_t>(f)].median;
    };
    EXPECT_GT(median(TrendClass::Meme, SocialFeature::RetweetRatio),
              median(TrendClass::OngoingEvent, SocialFeature::RetweetRatio));
    for (auto c : {TrendClass::News, TrendClass::Meme, TrendClass::Commemorative}) {
        EXPECT_LT(median(TrendClass::OngoingEvent, SocialFeature::LengthMean), median(c, SocialFeature::LengthMean));
    }
}

TEST(Synth, InvalidProfilesNameTheField) {
    auto expect_field = [](ClassProfile p, const std::string& field) {
        try {
            validate_profile(p);
            FAIL() << "expected an error for " << field;
        } catch (const InvalidArgumentError& e) {
            EXPECT_NE(std::string(e.what()).find(field), std::string::npos) << e.what();
        }
    };
    const auto base = default_profiles()[0];
    EXPECT_NO_THROW(validate_profile(base));

    auto p = base;
    p.retweet_probability = {0.2, 1.5};
    expect_field(p, "retweet_probability");
    p = base;
    p.deeper_retweet_probability = -0.1;
    expect_field(p, "deeper_retweet_probability");
    p = base;
    p.length_mean = {90, 80};
    expect_field(p, "length_mean");
    p = base;
    p.users.size = 0;
    expect_field(p, "users");
    p = base;
    p.topic_repetition = {0.5, 1.0};
    expect_field(p, "topic_repetition");
    p = base;
    p.signature_terms = {"two words"};
    expect_field(p, "signature_terms");

    auto profiles = default_profiles();
    profiles[2].languages.size = 0;
    EXPECT_THROW(generate_synthetic_corpus(profiles, small()), InvalidArgumentError);
}

TEST(Quantile, LinearInterpolation) {
    const std::vector<double> v{1, 2, 3, 4};
    EXPECT_DOUBLE_EQ(quantile(v, 0.25), 1.75);
    EXPECT_DOUBLE_EQ(quantile(v, 0.5), 2.5);
    EXPECT_DOUBLE_EQ(quantile(v, 1.0), 4.0);
    EXPECT_THROW(quantile(std::span<const double>{}, 0.5), InvalidArgumentError);
    EXPECT_THROW(quantile(v, 1.5), InvalidArgumentError);

    auto s = summarize({7, 1, 3});
    EXPECT_EQ(s.min, 1.0);
    EXPECT_EQ(s.q1, 2.0);
    EXPECT_EQ(s.median, 3.0);
    EXPECT_EQ(s.q3, 5.0);
    EXPECT_EQ(s.max, 7.0);
}

TEST(AnalyzeDistributions, SingleTrendClassCollapses) {
    Corpus c{{make_trend("a", {tweet("hello #x", 0, "u"), tweet("RT @u: hello #x", 4, "v")}, TrendClass::Meme)}};
    auto r = analyze_distributions(c);
    EXPECT_EQ(r.trend_counts[index_of(TrendClass::Meme)], 1u);
    EXPECT_EQ(r.trend_counts[index_of(TrendClass::News)], 0u);
    for (const auto& cell : r.cells[index_of(TrendClass::Meme)]) {
        EXPECT_EQ(cell.min, cell.q1);
        EXPECT_EQ(cell.q1, cell.median);
        EXPECT_EQ(cell.median, cell.q3);
        EXPECT_EQ(cell.q3, cell.max);
    }
}

TEST(AnalyzeDistributions, ConstantFeatureHasZeroIqr) {
    Corpus c;
    for (int i = 0; i < 5; ++i) {
        c.trends.push_back(make_trend("t" + std::to_string(i), {tweet("word " + std::to_string(i), i, "u")},
                                      TrendClass::News));
    }
    auto r = analyze_distributions(c);
    const auto& ratio = r.cells[index_of(TrendClass::News)][static_cast<std::size_t>(SocialFeature::RetweetRatio)];
    EXPECT_EQ(ratio.q3 - ratio.q1, 0.0);
}

TEST(AnalyzeDistributions, UnlabeledTrendIsAnError) {
    Corpus c{{make_trend("a", {tweet("x")})}};
    EXPECT_THROW(analyze_distributions(c), InvalidArgumentError);
}

TEST(AnalyzeDistributions, MonotoneCells) {
    auto r = analyze_distributions(generate_synthetic_corpus(default_profiles(), small(13)));
    for (const auto& cls : r.cells) {
        for (const auto& cell : cls) {
            EXPECT_LE(cell.min, cell.q1);
            EXPECT_LE(cell.q1, cell.median);
            EXPECT_LE(cell.median, cell.q3);
            EXPECT_LE(cell.q3, cell.max);
        }
    }
}

} // namespace
} // namespace trendclass
