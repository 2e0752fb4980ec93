#pragma once

#include <array>
#include <span>
#include <vector>

#include "trendclass/corpus.hpp"
#include "trendclass/features.hpp"
#include "trendclass/label.hpp"

namespace trendclass {

struct FiveNumberSummary {
    double min = 0.0;
    double q1 = 0.0;
    double median = 0.0;
    double q3 = 0.0;
    double max = 0.0;
};

/// Linear interpolation between order statistics (position p * (n - 1)).
/// Throws InvalidArgumentError on empty input or p outside [0, 1].
double quantile(std::span<const double> sorted, double p);

FiveNumberSummary summarize(std::vector<double> values);

struct QuartileReport {
    PerClass<std::array<FiveNumberSummary, kSocialFeatureCount>> cells{};
    PerClass<std::size_t> trend_counts{};
};

/// Throws InvalidArgumentError on an unlabeled trend.
QuartileReport analyze_distributions(const Corpus& corpus);
QuartileReport analyze_distributions(std::span<const SocialFeatureVector> features,
                                     std::span<const TrendClass> labels);

} // namespace trendclass
