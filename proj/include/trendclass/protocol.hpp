#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "trendclass/classifier.hpp"
#include "trendclass/corpus.hpp"
#include "trendclass/eval.hpp"

namespace trendclass {

/// Metrics of one representation over repeated splits.
struct RepeatedEvaluation {
    EvalReport mean;                   // metric-wise mean over repeats
    EvalReport pooled;                 // metrics of the summed confusion
    std::vector<EvalReport> per_repeat;
};

struct ProtocolOptions {
    std::size_t train_size = kDefaultTrainSize;
    std::size_t repeats = kDefaultRepeats;
    std::uint64_t seed = 42;
    TrainOptions train;
    bool social = true;
    bool bow = false;
    StopwordSet stopwords = default_stopwords();
};

struct ProtocolResult {
    std::optional<RepeatedEvaluation> social;
    std::optional<RepeatedEvaluation> bow;
    std::optional<RepeatedEvaluation> committee;  // only when both representations ran
};

/// Splits, trains and tests `repeats` times. Every trend must be labeled.
ProtocolResult run_protocol(const Corpus& corpus, const ProtocolOptions& options);

/// Predicts every trend with one model, or with the margin-sum committee of
/// several. Every trend must be labeled.
EvalReport evaluate_models(std::span<const OneVsAllModel> models, const Corpus& test);

/// Prediction for one trend: the model's own argmax for a single model,
/// the committee decision otherwise.
CommitteeDecision predict(std::span<const OneVsAllModel> models, const TrendingTopic& trend,
                          std::vector<MarginReport>* reports = nullptr);

} // namespace trendclass
