#pragma once

#include <trendclass/corpus.hpp>

#include <string>
#include <vector>

namespace trendclass::testing {

inline Tweet tweet(std::string text, std::int64_t ts = 0, std::string user = "u", std::string lang = "en") {
    return Tweet{std::move(text), ts, std::move(user), std::move(lang)};
}

// Five tweets about "Interpol": an original, two retweet levels, a reply and a link.
inline TrendingTopic interpol_trend() {
    const std::string original =
        "Interpol issues arrests warrants for Gaddafi & 15 senior Libyan officials. #Libya";
    TrendingTopic t;
    t.topic = "Interpol";
    t.tweets = {
        tweet(original, 100, "u1"),
        tweet("RT @u1: " + original, 110, "u2"),
        tweet("@u1 - so Interpol cannot act until he & family leave Libya, is that right? Assuming he is toppled?",
              120, "u3"),
        tweet("RT @u2: RT @u1: " + original, 130, "u4"),
        tweet("Interpol has issued international alert for Muammar Gaddafi & 15 other family members & close "
              "associates | Telegraph http://bit.ly/h9GwYI",
              140, "u5"),
    };
    t.label = TrendClass::News;
    return t;
}

inline TrendingTopic make_trend(std::string topic, std::vector<Tweet> tweets,
                                std::optional<TrendClass> label = std::nullopt) {
    return TrendingTopic{std::move(topic), std::move(tweets), label};
}

} // namespace trendclass::testing
