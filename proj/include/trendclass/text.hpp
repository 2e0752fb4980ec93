#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "trendclass/corpus.hpp"

namespace trendclass {

using StopwordSet = std::set<std::string, std::less<>>;

/// Sparse term counts. Never stores a zero count.
struct TermFrequencyVector {
    std::map<std::string, std::size_t, std::less<>> counts;

    std::size_t total() const noexcept;
    void add(std::string_view term, std::size_t n = 1);
    TermFrequencyVector& operator+=(const TermFrequencyVector& other);

    bool operator==(const TermFrequencyVector&) const = default;
};

/// Ordered term list plus reverse index.
class Vocabulary {
public:
    Vocabulary() = default;
    explicit Vocabulary(std::vector<std::string> terms);

    /// Adds the term if absent and returns its position.
    std::size_t insert(std::string_view term);
    std::optional<std::size_t> find(std::string_view term) const;

    const std::vector<std::string>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool operator==(const Vocabulary& other) const { return terms_ == other.terms_; }

private:
    std::vector<std::string> terms_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// Whitespace split, lowercase, drop URLs, strip leading/trailing
/// punctuation ('@' is kept so mentions survive). No stopword filtering.
std::vector<std::string> normalize_tokens(std::string_view text);

/// normalize_tokens minus stopwords and the Twitter token "rt".
std::vector<std::string> tokenize_filtered(std::string_view text, const StopwordSet& stopwords);

TermFrequencyVector tf_vector(const TrendingTopic& trend, const StopwordSet& stopwords);

/// k most frequent terms over every trend of `label`, count descending then
/// term ascending. Empty when the class has no trends.
std::vector<std::pair<std::string, std::size_t>> top_terms(const Corpus& corpus, TrendClass label,
                                                           std::size_t k, const StopwordSet& stopwords);

/// English, Spanish, Portuguese and Dutch lists compiled in from data/stopwords.
const StopwordSet& default_stopwords();

/// One word per line; blank lines and lines starting with '#' ignored.
StopwordSet load_stopwords(std::istream& in);
StopwordSet load_stopwords_file(const std::string& path);

} // namespace trendclass
