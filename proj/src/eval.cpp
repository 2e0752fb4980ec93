#include "trendclass/eval.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "trendclass/error.hpp"

namespace trendclass {

void ConfusionMatrix::add(TrendClass gold, TrendClass predicted, std::int64_t n) noexcept {
    counts[index_of(gold)][index_of(predicted)] += n;
}

std::int64_t ConfusionMatrix::total() const noexcept {
    std::int64_t n = 0;
    for (const auto& row : counts) n = std::accumulate(row.begin(), row.end(), n);
    return n;
}

std::int64_t ConfusionMatrix::trace() const noexcept {
    std::int64_t n = 0;
    for (std::size_t i = 0; i < kClassCount; ++i) n += counts[i][i];
    return n;
}

std::int64_t ConfusionMatrix::row_sum(TrendClass gold) const noexcept {
    const auto& row = counts[index_of(gold)];
    return std::accumulate(row.begin(), row.end(), std::int64_t{0});
}

std::int64_t ConfusionMatrix::column_sum(TrendClass predicted) const noexcept {
    std::int64_t n = 0;
    for (const auto& row : counts) n += row[index_of(predicted)];
    return n;
}

ConfusionMatrix& ConfusionMatrix::operator+=(const ConfusionMatrix& other) noexcept {
    for (std::size_t i = 0; i < kClassCount; ++i) {
        for (std::size_t j = 0; j < kClassCount; ++j) counts[i][j] += other.counts[i][j];
    }
    return *this;
}

double observed_agreement(const ConfusionMatrix& confusion) {
    const auto n = confusion.total();
    if (n <= 0) throw InvalidArgumentError("confusion matrix is empty");
    return static_cast<double>(confusion.trace()) / static_cast<double>(n);
}

double chance_agreement(const ConfusionMatrix& confusion) {
    const auto n = confusion.total();
    if (n <= 0) throw InvalidArgumentError("confusion matrix is empty");
    // Integer marginal products keep Pc exact up to the final division.
    std::int64_t products = 0;
    for (auto c : kAllClasses) products += confusion.row_sum(c) * confusion.column_sum(c);
    return static_cast<double>(products) / (static_cast<double>(n) * static_cast<double>(n));
}

double cohen_kappa(const ConfusionMatrix& confusion) {
    const double observed = observed_agreement(confusion);
    const double chance = chance_agreement(confusion);
    if (chance == 1.0) {
        if (observed == 1.0) return 1.0;
        throw InvalidArgumentError("kappa undefined: chance agreement is 1 without perfect agreement");
    }
    return (observed - chance) / (1.0 - chance);
}

double fleiss_kappa(std::span<const std::vector<std::int64_t>> ratings, std::int64_t raters) {
    if (raters < 2) throw InvalidArgumentError("Fleiss' kappa needs at least 2 raters per item");
    if (ratings.empty()) throw InvalidArgumentError("Fleiss' kappa needs at least one item");
    const std::size_t categories = ratings.front().size();
    std::vector<std::int64_t> category_totals(categories, 0);

    const auto r = static_cast<double>(raters);
    double agreement_sum = 0.0;
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        const auto& row = ratings[i];
        if (row.size() != categories) throw InvalidArgumentError("rating rows have different category counts");
        std::int64_t sum = 0;
        std::int64_t squares = 0;
        for (std::size_t j = 0; j < categories; ++j) {
            if (row[j] < 0) throw InvalidArgumentError("negative rating count");
            sum += row[j];
            squares += row[j] * row[j];
            category_totals[j] += row[j];
        }
        if (sum != raters) {
            throw InvalidArgumentError("item " + std::to_string(i) + " has " + std::to_string(sum) + " ratings, expected " +
                                       std::to_string(raters));
        }
        agreement_sum += static_cast<double>(squares - raters) / (r * (r - 1.0));
    }

    const auto items = static_cast<double>(ratings.size());
    const double mean_agreement = agreement_sum / items;
    double chance = 0.0;
    for (auto total : category_totals) {
        const double p = static_cast<double>(total) / (items * r);
        chance += p * p;
    }
    if (chance == 1.0) {
        if (mean_agreement == 1.0) return 1.0;
        throw InvalidArgumentError("Fleiss' kappa undefined: chance agreement is 1");
    }
    return (mean_agreement - chance) / (1.0 - chance);
}

EvalReport make_report(const ConfusionMatrix& confusion) {
    EvalReport report;
    report.confusion = confusion;
    report.accuracy = observed_agreement(confusion);
    report.cohen_kappa = cohen_kappa(confusion);
    for (auto c : kAllClasses) {
        const auto column = confusion.column_sum(c);
        const auto i = index_of(c);
        if (column == 0) {
            report.precision[i] = 0.0;
            report.precision_undefined[i] = true;
        } else {
            report.precision[i] = static_cast<double>(confusion.counts[i][i]) / static_cast<double>(column);
        }
    }
    return report;
}

EvalReport evaluate_predictions(std::span<const TrendClass> gold, std::span<const TrendClass> predicted) {
    if (gold.size() != predicted.size()) throw InvalidArgumentError("gold and predicted lengths differ");
    ConfusionMatrix confusion;
    for (std::size_t i = 0; i < gold.size(); ++i) confusion.add(gold[i], predicted[i]);
    return make_report(confusion);
}

EvalReport average_reports(std::span<const EvalReport> reports) {
    if (reports.empty()) throw InvalidArgumentError("no reports to average");
    EvalReport mean;
    for (const auto& r : reports) {
        mean.accuracy += r.accuracy;
        mean.cohen_kappa += r.cohen_kappa;
        for (std::size_t c = 0; c < kClassCount; ++c) {
            mean.precision[c] += r.precision[c];
            mean.precision_undefined[c] = mean.precision_undefined[c] || r.precision_undefined[c];
        }
        mean.confusion += r.confusion;
    }
    const auto n = static_cast<double>(reports.size());
    mean.accuracy /= n;
    mean.cohen_kappa /= n;
    for (double& p : mean.precision) p /= n;
    return mean;
}

std::vector<Partition> split_train_test(std::size_t corpus_size, std::size_t train_size, std::size_t repeats,
                                        std::uint64_t seed) {
    if (train_size == 0) throw InvalidArgumentError("train size must be positive");
    if (train_size >= corpus_size) {
        throw InvalidArgumentError("train size " + std::to_string(train_size) + " must be smaller than the corpus (" +
                                   std::to_string(corpus_size) + " trends)");
    }
    std::vector<Partition> partitions;
    partitions.reserve(repeats);
    std::mt19937_64 rng(seed);
    std::vector<std::size_t> order(corpus_size);
    for (std::size_t r = 0; r < repeats; ++r) {
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::shuffle(order.begin(), order.end(), rng);
        Partition p;
        p.train.assign(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(train_size));
        p.test.assign(order.begin() + static_cast<std::ptrdiff_t>(train_size), order.end());
        std::sort(p.train.begin(), p.train.end());
        std::sort(p.test.begin(), p.test.end());
        partitions.push_back(std::move(p));
    }
    return partitions;
}

std::vector<TrendClass> gold_labels(const Corpus& corpus) {
    std::vector<TrendClass> labels;
    labels.reserve(corpus.size());
    for (const auto& trend : corpus.trends) {
        if (!trend.label) throw InvalidArgumentError("trend \"" + trend.topic + "\" has no label");
        labels.push_back(*trend.label);
    }
    return labels;
}

} // namespace trendclass
