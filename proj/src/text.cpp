#include "trendclass/text.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "trendclass/error.hpp"
#include "trendclass/utf8.hpp"

namespace trendclass {

namespace detail {
// Generated from data/stopwords/*.txt at build time.
extern const std::array<std::string_view, 4> kBundledStopwordLists;
} // namespace detail

namespace {

constexpr std::array<std::string_view, 11> kUnicodePunctuation = {
    "¡", "¿", "«", "»", "“", "”", "‘", "’", "…", "–", "—"};

bool is_ascii_punct(char c) noexcept {
    return (c >= '!' && c <= '/') || (c >= ':' && c <= '@') || (c >= '[' && c <= '`') || (c >= '{' && c <= '~');
}

/// Byte length of a punctuation mark starting at pos, 0 if none.
std::size_t punct_at(std::string_view s, std::size_t pos, bool keep_at) noexcept {
    if (is_ascii_punct(s[pos])) return (keep_at && s[pos] == '@') ? 0 : 1;
    for (auto p : kUnicodePunctuation) {
        if (s.substr(pos, p.size()) == p) return p.size();
    }
    return 0;
}

/// Length of a punctuation mark ending right before `end`, 0 if none.
std::size_t punct_before(std::string_view s, std::size_t end) noexcept {
    if (end == 0) return 0;
    if (is_ascii_punct(s[end - 1])) return 1;
    for (auto p : kUnicodePunctuation) {
        if (end >= p.size() && s.substr(end - p.size(), p.size()) == p) return p.size();
    }
    return 0;
}

std::string_view strip_punctuation(std::string_view token) noexcept {
    std::size_t begin = 0;
    while (begin < token.size()) {
        const auto n = punct_at(token, begin, true);
        if (n == 0) break;
        begin += n;
    }
    std::size_t end = token.size();
    while (end > begin) {
        const auto n = punct_before(token, end);
        if (n == 0 || end - n < begin) break;
        end -= n;
    }
    return token.substr(begin, end - begin);
}

bool is_space(char c) noexcept { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v'; }

} // namespace

std::size_t TermFrequencyVector::total() const noexcept {
    std::size_t n = 0;
    for (const auto& [_, c] : counts) n += c;
    return n;
}

void TermFrequencyVector::add(std::string_view term, std::size_t n) {
    if (n == 0) return;
    auto it = counts.find(term);
    if (it == counts.end()) {
        counts.emplace(std::string(term), n);
    } else {
        it->second += n;
    }
}

TermFrequencyVector& TermFrequencyVector::operator+=(const TermFrequencyVector& other) {
    for (const auto& [term, c] : other.counts) add(term, c);
    return *this;
}

Vocabulary::Vocabulary(std::vector<std::string> terms) {
    for (auto& t : terms) {
        if (!index_.emplace(t, terms_.size()).second) {
            throw InvalidArgumentError("duplicate vocabulary term \"" + t + "\"");
        }
        terms_.push_back(std::move(t));
    }
}

std::size_t Vocabulary::insert(std::string_view term) {
    auto [it, inserted] = index_.emplace(std::string(term), terms_.size());
    if (inserted) terms_.emplace_back(term);
    return it->second;
}

std::optional<std::size_t> Vocabulary::find(std::string_view term) const {
    auto it = index_.find(std::string(term));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::vector<std::string> normalize_tokens(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (pos < text.size()) {
        while (pos < text.size() && is_space(text[pos])) ++pos;
        std::size_t end = pos;
        while (end < text.size() && !is_space(text[end])) ++end;
        if (end > pos) {
            const auto lowered = utf8::to_lower(text.substr(pos, end - pos));
            const auto stripped = strip_punctuation(lowered);
            // Anything starting with the scheme prefix is treated as a URL, including
            // truncated ones like "http:/bit.ly".
            if (!stripped.empty() && !stripped.starts_with("http")) tokens.emplace_back(stripped);
        }
        pos = end;
    }
    return tokens;
}

std::vector<std::string> tokenize_filtered(std::string_view text, const StopwordSet& stopwords) {
    auto tokens = normalize_tokens(text);
    std::erase_if(tokens, [&](const std::string& t) { return t == "rt" || stopwords.contains(t); });
    return tokens;
}

TermFrequencyVector tf_vector(const TrendingTopic& trend, const StopwordSet& stopwords) {
    if (trend.tweets.empty()) throw EmptyTrendError();
    TermFrequencyVector tf;
    for (const auto& tweet : trend.tweets) {
        for (const auto& term : tokenize_filtered(tweet.text, stopwords)) tf.add(term);
    }
    return tf;
}

std::vector<std::pair<std::string, std::size_t>> top_terms(const Corpus& corpus, TrendClass label, std::size_t k,
                                                           const StopwordSet& stopwords) {
    TermFrequencyVector total;
    for (const auto& trend : corpus.trends) {
        if (trend.label == label) total += tf_vector(trend, stopwords);
    }
    std::vector<std::pair<std::string, std::size_t>> ranked(total.counts.begin(), total.counts.end());
    const auto by_count = [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second > b.second : a.first < b.first;
    };
    const auto n = std::min(k, ranked.size());
    std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(n), ranked.end(), by_count);
    ranked.resize(n);
    return ranked;
}

StopwordSet load_stopwords(std::istream& in) {
    StopwordSet words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || is_space(line.back()))) line.pop_back();
        std::size_t start = 0;
        while (start < line.size() && is_space(line[start])) ++start;
        if (start == line.size() || line[start] == '#') continue;
        words.insert(utf8::to_lower(std::string_view(line).substr(start)));
    }
    return words;
}

StopwordSet load_stopwords_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open stopword file " + path);
    return load_stopwords(in);
}

const StopwordSet& default_stopwords() {
    static const StopwordSet words = [] {
        StopwordSet all;
        for (auto list : detail::kBundledStopwordLists) {
            std::istringstream in{std::string(list)};
            all.merge(load_stopwords(in));
        }
        return all;
    }();
    return words;
}

} // namespace trendclass
