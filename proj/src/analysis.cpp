#include "trendclass/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "trendclass/error.hpp"

namespace trendclass {

double quantile(std::span<const double> sorted, double p) {
    if (sorted.empty()) throw InvalidArgumentError("quantile of an empty sample");
    if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgumentError("quantile level must lie in [0, 1]");
    const double position = p * static_cast<double>(sorted.size() - 1);
    const auto lower = static_cast<std::size_t>(std::floor(position));
    const auto upper = std::min(lower + 1, sorted.size() - 1);
    const double fraction = position - static_cast<double>(lower);
    // Written as a convex combination so equal neighbours give that value exactly.
    return sorted[lower] + fraction * (sorted[upper] - sorted[lower]);
}

FiveNumberSummary summarize(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    return FiveNumberSummary{quantile(values, 0.0), quantile(values, 0.25), quantile(values, 0.5),
                             quantile(values, 0.75), quantile(values, 1.0)};
}

QuartileReport analyze_distributions(std::span<const SocialFeatureVector> features,
                                     std::span<const TrendClass> labels) {
    if (features.size() != labels.size()) throw InvalidArgumentError("features and labels differ in length");
    QuartileReport report;
    for (auto c : kAllClasses) {
        std::array<std::vector<double>, kSocialFeatureCount> columns;
        for (std::size_t i = 0; i < features.size(); ++i) {
            if (labels[i] != c) continue;
            for (std::size_t f = 0; f < kSocialFeatureCount; ++f) columns[f].push_back(features[i].values[f]);
        }
        report.trend_counts[index_of(c)] = columns[0].size();
        if (columns[0].empty()) continue;
        for (std::size_t f = 0; f < kSocialFeatureCount; ++f) {
            report.cells[index_of(c)][f] = summarize(std::move(columns[f]));
        }
    }
    return report;
}

QuartileReport analyze_distributions(const Corpus& corpus) {
    std::vector<SocialFeatureVector> features;
    std::vector<TrendClass> labels;
    features.reserve(corpus.size());
    labels.reserve(corpus.size());
    for (const auto& trend : corpus.trends) {
        if (!trend.label) throw InvalidArgumentError("trend \"" + trend.topic + "\" has no label");
        labels.push_back(*trend.label);
        features.push_back(extract_features(trend));
    }
    return analyze_distributions(features, labels);
}

} // namespace trendclass
