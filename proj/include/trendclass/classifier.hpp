#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "trendclass/corpus.hpp"
#include "trendclass/features.hpp"
#include "trendclass/label.hpp"
#include "trendclass/text.hpp"

namespace trendclass {

enum class Representation { Social, BagOfWords };

std::string_view to_string(Representation r) noexcept;
std::optional<Representation> parse_representation(std::string_view s) noexcept;

inline constexpr double kDefaultPenalty = 5.0;
inline constexpr int kModelFormatVersion = 1;

struct LinearModel {
    std::vector<double> weights;
    double bias = 0.0;

    double score(std::span<const double> x) const;
    bool operator==(const LinearModel&) const = default;
};

/// One training example for a binary problem; label is +1 or -1.
struct BinaryExample {
    std::vector<double> x;
    int y = 1;
};

struct TrainOptions {
    double penalty = kDefaultPenalty;  // C
    std::uint64_t seed = 42;
    std::size_t max_epochs = 200;
    double relative_tolerance = 1e-6;
};

/// (1/2)|w|^2 + C * sum_i max(0, 1 - y_i (w.x_i + b)).
double hinge_objective(const LinearModel& model, std::span<const BinaryExample> examples, double penalty);

/// A subgradient of hinge_objective; terms sitting exactly on the hinge
/// contribute nothing. Weights and bias of the result are the partials.
LinearModel hinge_subgradient(const LinearModel& model, std::span<const BinaryExample> examples,
                              double penalty);

/// Seeded epoch-based dual coordinate descent on the hinge objective, with
/// an exact line search on the bias after every epoch. Returns the
/// lowest-objective iterate seen at an epoch boundary, so the result never
/// scores worse than the zero model.
/// Throws DegenerateTrainingError when only one label is present and
/// DimensionMismatchError on ragged input.
LinearModel train_binary(std::span<const BinaryExample> examples, const TrainOptions& options);

/// Per-dimension z-score parameters. Constant dimensions get stddev 1.
struct Standardizer {
    std::vector<double> mean;
    std::vector<double> stddev;

    static Standardizer fit(std::span<const std::vector<double>> rows);
    static Standardizer identity(std::size_t dimension);

    std::vector<double> apply(std::span<const double> x) const;
    std::size_t dimension() const noexcept { return mean.size(); }

    bool operator==(const Standardizer&) const = default;
};

struct OneVsAllModel {
    Representation representation = Representation::Social;
    Standardizer scaler;
    PerClass<LinearModel> per_class;
    std::optional<Vocabulary> vocabulary;  // bag-of-words only
    StopwordSet stopwords;                 // bag-of-words only

    std::size_t dimension() const noexcept { return scaler.dimension(); }
    bool operator==(const OneVsAllModel&) const = default;
};

struct MarginReport {
    PerClass<double> margins{};
    TrendClass predicted = TrendClass::News;
};

struct CommitteeDecision {
    TrendClass predicted = TrendClass::News;
    PerClass<double> sums{};
};

/// Trains class c against the other three, for each of the four classes.
/// Throws MissingClassError naming the first class without training trends.
OneVsAllModel train_one_vs_all(const Corpus& corpus, Representation representation,
                               const TrainOptions& options, const StopwordSet& stopwords = default_stopwords());

/// Same, from precomputed representations.
OneVsAllModel train_social(std::span<const SocialFeatureVector> features, std::span<const TrendClass> labels,
                           const TrainOptions& options);
OneVsAllModel train_bow(std::span<const TermFrequencyVector> vectors, std::span<const TrendClass> labels,
                        const TrainOptions& options, const StopwordSet& stopwords = default_stopwords());

/// Argmax over margins, ties to the earliest class.
MarginReport make_report(const PerClass<double>& margins) noexcept;

MarginReport margins(const OneVsAllModel& model, const TrendingTopic& trend);
MarginReport margins(const OneVsAllModel& model, const SocialFeatureVector& features);
MarginReport margins(const OneVsAllModel& model, const TermFrequencyVector& tf);

/// Sums margins class by class and takes the argmax. Throws
/// InvalidArgumentError on an empty list.
CommitteeDecision committee_predict(std::span<const MarginReport> reports);

void save_model(const OneVsAllModel& model, std::ostream& out);
OneVsAllModel load_model(std::istream& in);

/// A committee file holds several models in one document; a single-model
/// file loads as a committee of one.
void save_committee(std::span<const OneVsAllModel> models, std::ostream& out);
std::vector<OneVsAllModel> load_models(std::istream& in);
std::vector<OneVsAllModel> load_models_file(const std::string& path);

} // namespace trendclass
