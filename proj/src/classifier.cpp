#include "trendclass/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <numeric>
#include <random>

#include "json.hpp"
#include "trendclass/error.hpp"

namespace trendclass {

namespace {

struct SparseRow {
    std::vector<std::uint32_t> index;
    std::vector<double> value;

    double dot(const std::vector<double>& w) const noexcept {
        double s = 0.0;
        for (std::size_t k = 0; k < index.size(); ++k) s += w[index[k]] * value[k];
        return s;
    }
};

SparseRow to_sparse(std::span<const double> x) {
    SparseRow row;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j] != 0.0) {
            row.index.push_back(static_cast<std::uint32_t>(j));
            row.value.push_back(x[j]);
        }
    }
    return row;
}

double sparse_objective(const std::vector<double>& w, double b, const std::vector<SparseRow>& rows,
                        std::span<const int> labels, double penalty) {
    double norm = 0.0;
    for (double wj : w) norm += wj * wj;
    double loss = 0.0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        loss += std::max(0.0, 1.0 - labels[i] * (rows[i].dot(w) + b));
    }
    return 0.5 * norm + penalty * loss;
}

/// Exact minimizer over the bias of C * sum max(0, 1 - y (s + b)) for fixed
/// scores s. The loss is convex piecewise linear in b with kinks at the
/// per-example thresholds, so a minimum sits on one of them. Keeps `current`
/// when it is already optimal.
double best_bias(std::span<const double> scores, std::span<const int> labels, double current) {
    const auto loss = [&](double b) {
        double total = 0.0;
        for (std::size_t i = 0; i < scores.size(); ++i) total += std::max(0.0, 1.0 - labels[i] * (scores[i] + b));
        return total;
    };
    double best = current;
    double best_loss = loss(current);
    for (std::size_t i = 0; i < scores.size(); ++i) {
        const double threshold = labels[i] - scores[i];  // y = +-1, so 1/y = y
        const double l = loss(threshold);
        if (l < best_loss || (l == best_loss && std::abs(threshold - current) < std::abs(best - current))) {
            best = threshold;
            best_loss = l;
        }
    }
    return best;
}

/// Epoch-based dual coordinate descent on the hinge objective. Each epoch
/// visits the examples in a seeded shuffle and takes the exact clipped step
/// on one dual variable. The bias rides along as a constant unit feature
/// during the sweep and is re-optimised exactly at every epoch boundary.
LinearModel train_sparse(const std::vector<SparseRow>& rows, std::span<const int> labels, std::size_t dimension,
                         const TrainOptions& options) {
    const std::size_t n = rows.size();
    const bool has_pos = std::find(labels.begin(), labels.end(), 1) != labels.end();
    const bool has_neg = std::find(labels.begin(), labels.end(), -1) != labels.end();
    if (!has_pos || !has_neg) throw DegenerateTrainingError("binary training needs both +1 and -1 examples");
    if (!(options.penalty > 0.0) || !std::isfinite(options.penalty)) {
        throw InvalidArgumentError("penalty C must be a positive finite number");
    }
    const double penalty = options.penalty;

    // bias rides along as an extra feature whose square is the mean row norm
    std::vector<double> squared_norm(n);
    double mean_square = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double q = 0.0;
        for (double v : rows[i].value) q += v * v;
        squared_norm[i] = q;
        mean_square += q / static_cast<double>(n);
    }
    const double bias_square = std::max(1.0, mean_square);
    for (double& q : squared_norm) q += bias_square;

    std::vector<double> w(dimension, 0.0);
    double bias = 0.0;
    std::vector<double> alpha(n, 0.0);
    std::vector<double> scores(n);

    // The zero model scores exactly C * n; it is the starting incumbent.
    LinearModel best{std::vector<double>(dimension, 0.0), 0.0};
    double best_objective = penalty * static_cast<double>(n);
    double previous = best_objective;

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::mt19937_64 rng(options.seed);

    for (std::size_t epoch = 0; epoch < options.max_epochs; ++epoch) {
        std::shuffle(order.begin(), order.end(), rng);
        for (std::size_t i : order) {
            const auto& row = rows[i];
            const double y = labels[i];
            const double gradient = y * (row.dot(w) + bias) - 1.0;
            const double updated = std::clamp(alpha[i] - gradient / squared_norm[i], 0.0, penalty);
            const double delta = (updated - alpha[i]) * y;
            if (delta == 0.0) continue;
            alpha[i] = updated;
            for (std::size_t k = 0; k < row.index.size(); ++k) w[row.index[k]] += delta * row.value[k];
            bias += delta * bias_square;
        }

        for (std::size_t i = 0; i < n; ++i) scores[i] = rows[i].dot(w);
        const double polished = best_bias(scores, labels, bias);
        const double objective = sparse_objective(w, polished, rows, labels, penalty);
        if (objective < best_objective) {
            best_objective = objective;
            best.weights = w;
            best.bias = polished;
        }
        if (std::abs(previous - objective) < options.relative_tolerance * previous) break;
        previous = objective;
    }
    return best;
}

void check_dimensions(std::span<const BinaryExample> examples) {
    if (examples.empty()) throw DegenerateTrainingError("no training examples");
    const auto d = examples.front().x.size();
    for (const auto& e : examples) {
        if (e.x.size() != d) throw DimensionMismatchError("training vectors have different dimensions");
        if (e.y != 1 && e.y != -1) throw InvalidArgumentError("binary labels must be +1 or -1");
    }
}

std::uint64_t class_seed(std::uint64_t seed, TrendClass c) noexcept {
    // splitmix64 finalizer so that neighbouring seeds give unrelated streams
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (index_of(c) + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

void require_all_classes(std::span<const TrendClass> labels) {
    PerClass<std::size_t> counts{};
    for (auto c : labels) ++counts[index_of(c)];
    for (auto c : kAllClasses) {
        if (counts[index_of(c)] == 0) {
            throw MissingClassError("no training trends for class \"" + std::string(to_string(c)) + "\"");
        }
    }
}

PerClass<LinearModel> train_all_classes(const std::vector<SparseRow>& rows, std::span<const TrendClass> labels,
                                        std::size_t dimension, const TrainOptions& options) {
    PerClass<std::future<LinearModel>> jobs;
    for (auto c : kAllClasses) {
        jobs[index_of(c)] = std::async(std::launch::async, [&, c] {
            std::vector<int> y(labels.size());
            for (std::size_t i = 0; i < labels.size(); ++i) y[i] = labels[i] == c ? 1 : -1;
            TrainOptions per_class = options;
            per_class.seed = class_seed(options.seed, c);
            return train_sparse(rows, y, dimension, per_class);
        });
    }
    PerClass<LinearModel> models;
    for (std::size_t i = 0; i < kClassCount; ++i) models[i] = jobs[i].get();
    return models;
}

PerClass<double> scores(const OneVsAllModel& model, const SparseRow& row) {
    PerClass<double> m{};
    for (std::size_t c = 0; c < kClassCount; ++c) {
        m[c] = row.dot(model.per_class[c].weights) + model.per_class[c].bias;
    }
    return m;
}

SparseRow bow_row(const Vocabulary& vocabulary, const TermFrequencyVector& tf) {
    std::vector<std::pair<std::uint32_t, double>> entries;
    for (const auto& [term, count] : tf.counts) {
        if (auto j = vocabulary.find(term)) entries.emplace_back(static_cast<std::uint32_t>(*j), static_cast<double>(count));
    }
    std::sort(entries.begin(), entries.end());
    SparseRow row;
    for (const auto& [j, value] : entries) {
        row.index.push_back(j);
        row.value.push_back(value);
    }
    return row;
}

} // namespace

std::string_view to_string(Representation r) noexcept {
    return r == Representation::Social ? "social" : "bow";
}

std::optional<Representation> parse_representation(std::string_view s) noexcept {
    if (s == "social") return Representation::Social;
    if (s == "bow") return Representation::BagOfWords;
    return std::nullopt;
}

double LinearModel::score(std::span<const double> x) const {
    if (x.size() != weights.size()) throw DimensionMismatchError("input dimension does not match the model");
    double s = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) s += weights[j] * x[j];
    return s + bias;
}

double hinge_objective(const LinearModel& model, std::span<const BinaryExample> examples, double penalty) {
    double norm = 0.0;
    for (double w : model.weights) norm += w * w;
    double loss = 0.0;
    for (const auto& e : examples) loss += std::max(0.0, 1.0 - e.y * model.score(e.x));
    return 0.5 * norm + penalty * loss;
}

LinearModel hinge_subgradient(const LinearModel& model, std::span<const BinaryExample> examples, double penalty) {
    LinearModel g{model.weights, 0.0};
    for (const auto& e : examples) {
        if (e.y * model.score(e.x) < 1.0) {
            for (std::size_t j = 0; j < g.weights.size(); ++j) g.weights[j] -= penalty * e.y * e.x[j];
            g.bias -= penalty * e.y;
        }
    }
    return g;
}

LinearModel train_binary(std::span<const BinaryExample> examples, const TrainOptions& options) {
    check_dimensions(examples);
    std::vector<SparseRow> rows;
    std::vector<int> labels;
    rows.reserve(examples.size());
    labels.reserve(examples.size());
    for (const auto& e : examples) {
        rows.push_back(to_sparse(e.x));
        labels.push_back(e.y);
    }
    return train_sparse(rows, labels, examples.front().x.size(), options);
}

Standardizer Standardizer::fit(std::span<const std::vector<double>> rows) {
    if (rows.empty()) throw InvalidArgumentError("cannot fit a standardizer on no rows");
    const std::size_t d = rows.front().size();
    const auto n = static_cast<double>(rows.size());
    Standardizer s{std::vector<double>(d, 0.0), std::vector<double>(d, 1.0)};
    for (std::size_t j = 0; j < d; ++j) {
        double lo = rows.front()[j];
        double hi = lo;
        double sum = 0.0;
        for (const auto& r : rows) {
            if (r.size() != d) throw DimensionMismatchError("rows have different dimensions");
            sum += r[j];
            lo = std::min(lo, r[j]);
            hi = std::max(hi, r[j]);
        }
        const double mean = sum / n;
        double ss = 0.0;
        for (const auto& r : rows) ss += (r[j] - mean) * (r[j] - mean);
        s.mean[j] = mean;
        s.stddev[j] = lo == hi ? 1.0 : std::sqrt(ss / n);
    }
    return s;
}

Standardizer Standardizer::identity(std::size_t dimension) {
    return Standardizer{std::vector<double>(dimension, 0.0), std::vector<double>(dimension, 1.0)};
}

std::vector<double> Standardizer::apply(std::span<const double> x) const {
    if (x.size() != mean.size()) throw DimensionMismatchError("input dimension does not match the scaler");
    std::vector<double> z(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) z[j] = (x[j] - mean[j]) / stddev[j];
    return z;
}

OneVsAllModel train_social(std::span<const SocialFeatureVector> features, std::span<const TrendClass> labels,
                           const TrainOptions& options) {
    if (features.size() != labels.size()) throw InvalidArgumentError("features and labels differ in length");
    require_all_classes(labels);

    std::vector<std::vector<double>> raw;
    raw.reserve(features.size());
    for (const auto& f : features) raw.emplace_back(f.values.begin(), f.values.end());

    OneVsAllModel model;
    model.representation = Representation::Social;
    model.scaler = Standardizer::fit(raw);
    std::vector<SparseRow> rows;
    rows.reserve(raw.size());
    for (const auto& r : raw) rows.push_back(to_sparse(model.scaler.apply(r)));
    model.per_class = train_all_classes(rows, labels, kSocialFeatureCount, options);
    return model;
}

OneVsAllModel train_bow(std::span<const TermFrequencyVector> vectors, std::span<const TrendClass> labels,
                        const TrainOptions& options, const StopwordSet& stopwords) {
    if (vectors.size() != labels.size()) throw InvalidArgumentError("vectors and labels differ in length");
    require_all_classes(labels);

    Vocabulary vocabulary;
    for (const auto& tf : vectors) {
        for (const auto& [term, _] : tf.counts) vocabulary.insert(term);
    }
    std::vector<SparseRow> rows;
    rows.reserve(vectors.size());
    for (const auto& tf : vectors) rows.push_back(bow_row(vocabulary, tf));

    OneVsAllModel model;
    model.representation = Representation::BagOfWords;
    model.scaler = Standardizer::identity(vocabulary.size());
    model.per_class = train_all_classes(rows, labels, vocabulary.size(), options);
    model.vocabulary = std::move(vocabulary);
    model.stopwords = stopwords;
    return model;
}

OneVsAllModel train_one_vs_all(const Corpus& corpus, Representation representation, const TrainOptions& options,
                               const StopwordSet& stopwords) {
    std::vector<TrendClass> labels;
    labels.reserve(corpus.size());
    for (const auto& trend : corpus.trends) {
        if (!trend.label) throw InvalidArgumentError("training trend \"" + trend.topic + "\" has no label");
        labels.push_back(*trend.label);
    }
    require_all_classes(labels);

    if (representation == Representation::Social) {
        std::vector<SocialFeatureVector> features;
        features.reserve(corpus.size());
        for (const auto& trend : corpus.trends) features.push_back(extract_features(trend));
        return train_social(features, labels, options);
    }
    std::vector<TermFrequencyVector> vectors;
    vectors.reserve(corpus.size());
    for (const auto& trend : corpus.trends) vectors.push_back(tf_vector(trend, stopwords));
    return train_bow(vectors, labels, options, stopwords);
}

MarginReport make_report(const PerClass<double>& margins) noexcept {
    return MarginReport{margins, argmax_class(margins)};
}

MarginReport margins(const OneVsAllModel& model, const SocialFeatureVector& features) {
    if (model.representation != Representation::Social) {
        throw InvalidArgumentError("social features given to a bag-of-words model");
    }
    return make_report(scores(model, to_sparse(model.scaler.apply(features.values))));
}

MarginReport margins(const OneVsAllModel& model, const TermFrequencyVector& tf) {
    if (model.representation != Representation::BagOfWords || !model.vocabulary) {
        throw InvalidArgumentError("term frequencies given to a social-feature model");
    }
    return make_report(scores(model, bow_row(*model.vocabulary, tf)));
}

MarginReport margins(const OneVsAllModel& model, const TrendingTopic& trend) {
    if (model.representation == Representation::Social) return margins(model, extract_features(trend));
    return margins(model, tf_vector(trend, model.stopwords));
}

CommitteeDecision committee_predict(std::span<const MarginReport> reports) {
    if (reports.empty()) throw InvalidArgumentError("committee needs at least one margin report");
    CommitteeDecision decision;
    for (const auto& r : reports) {
        for (std::size_t c = 0; c < kClassCount; ++c) decision.sums[c] += r.margins[c];
    }
    decision.predicted = argmax_class(decision.sums);
    return decision;
}

// ---------------------------------------------------------------------------
// Model files

namespace {

using nlohmann::json;

json model_to_json(const OneVsAllModel& model) {
    json doc;
    doc["version"] = kModelFormatVersion;
    doc["representation_kind"] = std::string(to_string(model.representation));
    auto& classes = doc["classes"] = json::array();
    for (auto c : kAllClasses) classes.push_back(std::string(to_string(c)));
    doc["scaler"] = {{"mean", model.scaler.mean}, {"stddev", model.scaler.stddev}};
    auto& per_class = doc["models"] = json::array();
    for (auto c : kAllClasses) {
        const auto& m = model.per_class[index_of(c)];
        per_class.push_back({{"class", std::string(to_string(c))}, {"weights", m.weights}, {"bias", m.bias}});
    }
    if (model.vocabulary) doc["vocabulary"] = model.vocabulary->terms();
    if (model.representation == Representation::BagOfWords) {
        doc["stopwords"] = std::vector<std::string>(model.stopwords.begin(), model.stopwords.end());
    }
    return doc;
}

std::vector<double> finite_vector(const json& v, const char* what) {
    if (!v.is_array()) throw CorruptModelError(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!x.is_number()) throw CorruptModelError(std::string(what) + " holds a non-number");
        const double d = x.get<double>();
        if (!std::isfinite(d)) throw CorruptModelError(std::string(what) + " holds a non-finite value");
        out.push_back(d);
    }
    return out;
}

OneVsAllModel model_from_json(const json& doc) {
    if (!doc.is_object()) throw CorruptModelError("model must be a JSON object");
    const auto version = doc.find("version");
    if (version == doc.end() || !version->is_number_integer()) throw CorruptModelError("model has no version");
    if (version->get<int>() != kModelFormatVersion) {
        throw CorruptModelError("unsupported model version " + std::to_string(version->get<int>()));
    }

    OneVsAllModel model;
    const auto kind = doc.value("representation_kind", std::string{});
    const auto representation = parse_representation(kind);
    if (!representation) throw CorruptModelError("unknown representation_kind \"" + kind + "\"");
    model.representation = *representation;

    const auto& classes = doc.at("classes");
    if (!classes.is_array() || classes.size() != kClassCount) throw CorruptModelError("model must list 4 classes");
    for (auto c : kAllClasses) {
        if (classes[index_of(c)] != to_string(c)) throw CorruptModelError("class list out of canonical order");
    }

    const auto& scaler = doc.at("scaler");
    model.scaler.mean = finite_vector(scaler.at("mean"), "scaler.mean");
    model.scaler.stddev = finite_vector(scaler.at("stddev"), "scaler.stddev");
    const auto d = model.scaler.mean.size();
    if (model.scaler.stddev.size() != d) throw CorruptModelError("scaler mean/stddev sizes differ");
    for (double s : model.scaler.stddev) {
        if (!(s > 0.0)) throw CorruptModelError("scaler stddev must be positive");
    }

    const auto& per_class = doc.at("models");
    if (!per_class.is_array() || per_class.size() != kClassCount) throw CorruptModelError("model must hold 4 linear models");
    for (auto c : kAllClasses) {
        const auto& m = per_class[index_of(c)];
        if (m.at("class") != to_string(c)) throw CorruptModelError("linear models out of canonical order");
        auto& lm = model.per_class[index_of(c)];
        lm.weights = finite_vector(m.at("weights"), "weights");
        if (lm.weights.size() != d) throw CorruptModelError("weight vector size does not match the scaler");
        const auto& bias = m.at("bias");
        if (!bias.is_number() || !std::isfinite(bias.get<double>())) throw CorruptModelError("bias must be finite");
        lm.bias = bias.get<double>();
    }

    if (model.representation == Representation::Social && d != kSocialFeatureCount) {
        throw CorruptModelError("social model must have 15 dimensions");
    }
    if (model.representation == Representation::BagOfWords) {
        auto terms = doc.at("vocabulary").get<std::vector<std::string>>();
        if (terms.size() != d) throw CorruptModelError("vocabulary size does not match the weights");
        try {
            model.vocabulary = Vocabulary(std::move(terms));
        } catch (const InvalidArgumentError& e) {
            throw CorruptModelError(e.what());
        }
        for (auto& w : doc.at("stopwords").get<std::vector<std::string>>()) model.stopwords.insert(std::move(w));
    }
    return model;
}

json parse_document(std::istream& in) {
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw CorruptModelError(std::string("corrupt model payload: ") + e.what());
    }
}

} // namespace

void save_model(const OneVsAllModel& model, std::ostream& out) {
    out << model_to_json(model).dump() << '\n';
    if (!out) throw Error("write error while saving model");
}

OneVsAllModel load_model(std::istream& in) {
    const auto doc = parse_document(in);
    if (doc.is_object() && doc.contains("committee")) {
        throw CorruptModelError("file holds a committee; load it with load_models");
    }
    try {
        return model_from_json(doc);
    } catch (const json::exception& e) {
        throw CorruptModelError(std::string("corrupt model payload: ") + e.what());
    }
}

void save_committee(std::span<const OneVsAllModel> models, std::ostream& out) {
    json doc;
    doc["version"] = kModelFormatVersion;
    auto& members = doc["committee"] = json::array();
    for (const auto& m : models) members.push_back(model_to_json(m));
    out << doc.dump() << '\n';
    if (!out) throw Error("write error while saving model");
}

std::vector<OneVsAllModel> load_models(std::istream& in) {
    const auto doc = parse_document(in);
    try {
        if (doc.is_object() && doc.contains("committee")) {
            if (doc.value("version", 0) != kModelFormatVersion) throw CorruptModelError("unsupported committee version");
            const auto& members = doc.at("committee");
            if (!members.is_array() || members.empty()) throw CorruptModelError("committee has no members");
            std::vector<OneVsAllModel> models;
            for (const auto& m : members) models.push_back(model_from_json(m));
            return models;
        }
        return {model_from_json(doc)};
    } catch (const json::exception& e) {
        throw CorruptModelError(std::string("corrupt model payload: ") + e.what());
    }
}

std::vector<OneVsAllModel> load_models_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    return load_models(in);
}

} // namespace trendclass
