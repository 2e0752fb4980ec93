#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "trendclass/corpus.hpp"
#include "trendclass/label.hpp"

namespace trendclass {

/// Rows are gold classes, columns predicted classes.
struct ConfusionMatrix {
    std::array<std::array<std::int64_t, kClassCount>, kClassCount> counts{};

    void add(TrendClass gold, TrendClass predicted, std::int64_t n = 1) noexcept;
    std::int64_t total() const noexcept;
    std::int64_t trace() const noexcept;
    std::int64_t row_sum(TrendClass gold) const noexcept;
    std::int64_t column_sum(TrendClass predicted) const noexcept;

    ConfusionMatrix& operator+=(const ConfusionMatrix& other) noexcept;
    bool operator==(const ConfusionMatrix&) const = default;
};

struct EvalReport {
    double accuracy = 0.0;
    double cohen_kappa = 0.0;
    PerClass<double> precision{};
    /// True where a class received no predictions and its precision was set to 0.
    PerClass<bool> precision_undefined{};
    ConfusionMatrix confusion;
};

/// Observed agreement: trace / total. Throws InvalidArgumentError on an empty matrix.
double observed_agreement(const ConfusionMatrix& confusion);

/// Chance agreement from products of the row and column marginals.
double chance_agreement(const ConfusionMatrix& confusion);

/// (P0 - Pc) / (1 - Pc). When Pc = 1 the result is 1 for perfect agreement
/// and an InvalidArgumentError otherwise.
double cohen_kappa(const ConfusionMatrix& confusion);

/// Fleiss' kappa for items x categories count rows, each summing to `raters`.
/// Throws InvalidArgumentError on a row with a different sum, raters < 2,
/// or no items.
double fleiss_kappa(std::span<const std::vector<std::int64_t>> ratings, std::int64_t raters);

EvalReport evaluate_predictions(std::span<const TrendClass> gold, std::span<const TrendClass> predicted);
EvalReport make_report(const ConfusionMatrix& confusion);

/// Metric-wise mean over repeats (not a pooled confusion). The confusion of
/// the result is the pooled sum; precision_undefined is set when any repeat
/// had the flag.
EvalReport average_reports(std::span<const EvalReport> reports);

struct Partition {
    std::vector<std::size_t> train;  // ascending
    std::vector<std::size_t> test;   // ascending
};

inline constexpr std::size_t kDefaultTrainSize = 600;
inline constexpr std::size_t kDefaultRepeats = 10;

/// `repeats` independent uniform train/test splits of 0..corpus_size-1.
/// Throws InvalidArgumentError when train_size >= corpus_size or train_size == 0.
std::vector<Partition> split_train_test(std::size_t corpus_size, std::size_t train_size,
                                        std::size_t repeats, std::uint64_t seed);

/// Gold labels of every trend. Throws InvalidArgumentError naming the first
/// unlabeled trend.
std::vector<TrendClass> gold_labels(const Corpus& corpus);

} // namespace trendclass
