#include "trendclass/protocol.hpp"

#include "trendclass/error.hpp"

namespace trendclass {

namespace {

RepeatedEvaluation summarize(std::vector<EvalReport> per_repeat) {
    RepeatedEvaluation result;
    result.mean = average_reports(per_repeat);
    result.pooled = make_report(result.mean.confusion);
    result.per_repeat = std::move(per_repeat);
    return result;
}

template <typename T>
std::vector<T> pick(const std::vector<T>& all, const std::vector<std::size_t>& indices) {
    std::vector<T> out;
    out.reserve(indices.size());
    for (auto i : indices) out.push_back(all[i]);
    return out;
}

} // namespace

ProtocolResult run_protocol(const Corpus& corpus, const ProtocolOptions& options) {
    if (!options.social && !options.bow) throw InvalidArgumentError("no representation selected");
    const auto labels = gold_labels(corpus);

    std::vector<SocialFeatureVector> social;
    std::vector<TermFrequencyVector> bow;
    if (options.social) {
        social.reserve(corpus.size());
        for (const auto& trend : corpus.trends) social.push_back(extract_features(trend));
    }
    if (options.bow) {
        bow.reserve(corpus.size());
        for (const auto& trend : corpus.trends) bow.push_back(tf_vector(trend, options.stopwords));
    }

    std::vector<EvalReport> social_reports;
    std::vector<EvalReport> bow_reports;
    std::vector<EvalReport> committee_reports;
    const auto partitions = split_train_test(corpus.size(), options.train_size, options.repeats, options.seed);
    for (std::size_t r = 0; r < partitions.size(); ++r) {
        const auto& part = partitions[r];
        const auto train_labels = pick(labels, part.train);
        const auto test_labels = pick(labels, part.test);
        TrainOptions train = options.train;
        train.seed = options.train.seed + r;

        std::vector<MarginReport> social_margins;
        std::vector<MarginReport> bow_margins;
        if (options.social) {
            const auto model = train_social(pick(social, part.train), train_labels, train);
            std::vector<TrendClass> predicted;
            for (auto i : part.test) {
                social_margins.push_back(margins(model, social[i]));
                predicted.push_back(social_margins.back().predicted);
            }
            social_reports.push_back(evaluate_predictions(test_labels, predicted));
        }
        if (options.bow) {
            const auto model = train_bow(pick(bow, part.train), train_labels, train, options.stopwords);
            std::vector<TrendClass> predicted;
            for (auto i : part.test) {
                bow_margins.push_back(margins(model, bow[i]));
                predicted.push_back(bow_margins.back().predicted);
            }
            bow_reports.push_back(evaluate_predictions(test_labels, predicted));
        }
        if (options.social && options.bow) {
            std::vector<TrendClass> predicted;
            for (std::size_t k = 0; k < part.test.size(); ++k) {
                const MarginReport pair[] = {social_margins[k], bow_margins[k]};
                predicted.push_back(committee_predict(pair).predicted);
            }
            committee_reports.push_back(evaluate_predictions(test_labels, predicted));
        }
    }

    ProtocolResult result;
    if (options.social) result.social = summarize(std::move(social_reports));
    if (options.bow) result.bow = summarize(std::move(bow_reports));
    if (options.social && options.bow) result.committee = summarize(std::move(committee_reports));
    return result;
}

CommitteeDecision predict(std::span<const OneVsAllModel> models, const TrendingTopic& trend,
                          std::vector<MarginReport>* reports) {
    if (models.empty()) throw InvalidArgumentError("no models given");
    std::vector<MarginReport> local;
    auto& out = reports ? *reports : local;
    out.clear();
    for (const auto& m : models) out.push_back(margins(m, trend));
    return committee_predict(out);
}

EvalReport evaluate_models(std::span<const OneVsAllModel> models, const Corpus& test) {
    const auto gold = gold_labels(test);
    std::vector<TrendClass> predicted;
    predicted.reserve(test.size());
    for (const auto& trend : test.trends) predicted.push_back(predict(models, trend).predicted);
    return evaluate_predictions(gold, predicted);
}

} // namespace trendclass
