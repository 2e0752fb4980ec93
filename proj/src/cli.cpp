#include "trendclass/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "trendclass/analysis.hpp"
#include "trendclass/classifier.hpp"
#include "trendclass/corpus.hpp"
#include "trendclass/csv.hpp"
#include "trendclass/error.hpp"
#include "trendclass/eval.hpp"
#include "trendclass/features.hpp"
#include "trendclass/protocol.hpp"
#include "trendclass/synth.hpp"
#include "trendclass/text.hpp"

namespace trendclass {

namespace {

using nlohmann::ordered_json;

/// Resolves "-" to the process streams, anything else to a file.
class Streams {
public:
    Streams(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

    std::istream& input(const std::string& path) {
        if (path == "-") return in_;
        auto file = std::make_unique<std::ifstream>(path, std::ios::binary);
        if (!*file) throw Error("cannot open " + path);
        auto& ref = *file;
        inputs_.push_back(std::move(file));
        return ref;
    }

    std::ostream& output(const std::string& path) {
        if (path == "-") return out_;
        auto file = std::make_unique<std::ofstream>(path, std::ios::binary);
        if (!*file) throw Error("cannot open " + path + " for writing");
        auto& ref = *file;
        outputs_.push_back(std::move(file));
        return ref;
    }

    void finish() {
        out_.flush();
        for (auto& f : outputs_) {
            f->flush();
            if (!*f) throw Error("write error");
        }
    }

private:
    std::istream& in_;
    std::ostream& out_;
    std::vector<std::unique_ptr<std::ifstream>> inputs_;
    std::vector<std::unique_ptr<std::ofstream>> outputs_;
};

StopwordSet stopwords_with(const std::vector<std::string>& files) {
    StopwordSet words = default_stopwords();
    for (const auto& f : files) words.merge(load_stopwords_file(f));
    return words;
}

ordered_json precision_json(const PerClass<double>& precision) {
    ordered_json p;
    for (auto c : kAllClasses) p[std::string(to_string(c))] = precision[index_of(c)];
    return p;
}

ordered_json confusion_json(const ConfusionMatrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m.counts) rows.push_back(row);
    return rows;
}

ordered_json report_json(const EvalReport& r, bool with_confusion) {
    ordered_json j;
    j["accuracy"] = r.accuracy;
    j["kappa"] = r.cohen_kappa;
    j["precision"] = precision_json(r.precision);
    ordered_json flagged = ordered_json::array();
    for (auto c : kAllClasses) {
        if (r.precision_undefined[index_of(c)]) flagged.push_back(std::string(to_string(c)));
    }
    j["precision_undefined"] = flagged;
    if (with_confusion) j["confusion"] = confusion_json(r.confusion);
    return j;
}

ordered_json repeated_json(const RepeatedEvaluation& e, bool verbose) {
    auto j = report_json(e.mean, true);
    j["per_repeat"] = ordered_json::array();
    for (const auto& r : e.per_repeat) j["per_repeat"].push_back(report_json(r, verbose));
    if (verbose) j["pooled"] = report_json(e.pooled, false);
    return j;
}

std::vector<Representation> representations(const std::string& rep) {
    if (rep == "both") return {Representation::Social, Representation::BagOfWords};
    auto r = parse_representation(rep);
    if (!r) throw InvalidArgumentError("unknown representation \"" + rep + "\" (social|bow|both)");
    return {*r};
}

void write_quartiles(const QuartileReport& report, std::ostream& out) {
    out << "class,feature,min,q1,median,q3,max\n";
    for (auto c : kAllClasses) {
        if (report.trend_counts[index_of(c)] == 0) continue;
        for (std::size_t f = 0; f < kSocialFeatureCount; ++f) {
            const auto& s = report.cells[index_of(c)][f];
            out << to_string(c) << ',' << feature_name(f) << ',' << csv::number(s.min) << ',' << csv::number(s.q1) << ','
                << csv::number(s.median) << ',' << csv::number(s.q3) << ',' << csv::number(s.max) << '\n';
        }
    }
}

void write_top_terms(const Corpus& corpus, std::size_t k, const StopwordSet& stopwords, std::ostream& out) {
    out << "class,rank,term,count\n";
    for (auto c : kAllClasses) {
        const auto terms = top_terms(corpus, c, k, stopwords);
        for (std::size_t r = 0; r < terms.size(); ++r) {
            out << to_string(c) << ',' << (r + 1) << ',' << csv::field(terms[r].first) << ',' << terms[r].second << '\n';
        }
    }
}

} // namespace

int run_pipeline(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Classify trending topics into news, ongoing events, memes and commemoratives", "trendclass"};
    app.name(args.empty() ? "trendclass" : args.front());
    app.require_subcommand(1);

    std::string in_path = "-";
    std::string out_path = "-";
    std::uint64_t seed = 42;
    double penalty = kDefaultPenalty;
    std::string rep = "social";
    std::vector<std::string> stopword_files;
    std::size_t trends_per_class = kDefaultTrendsPerClass;
    std::size_t tweets_per_trend = kDefaultTweetsPerTrend;
    std::string model_path;
    std::string model2_path;
    std::size_t train_size = kDefaultTrainSize;
    std::size_t repeats = kDefaultRepeats;
    bool verbose = false;
    std::size_t top_k = 0;

    auto* synth = app.add_subcommand("synth", "Generate a labeled synthetic corpus");
    synth->add_option("--seed", seed);
    synth->add_option("--trends-per-class", trends_per_class);
    synth->add_option("--tweets-per-trend", tweets_per_trend)->check(CLI::PositiveNumber);
    synth->add_option("--out", out_path);

    auto* features = app.add_subcommand("features", "Extract the 15 social features as CSV");
    features->add_option("--in", in_path);
    features->add_option("--out", out_path);

    auto* train = app.add_subcommand("train", "Train a one-vs-all model");
    train->add_option("--rep", rep)->check(CLI::IsMember({"social", "bow", "both"}));
    train->add_option("--C", penalty)->check(CLI::PositiveNumber);
    train->add_option("--seed", seed);
    train->add_option("--in", in_path);
    train->add_option("--out", out_path);
    train->add_option("--stopwords", stopword_files)->check(CLI::ExistingFile);

    auto* predict_cmd = app.add_subcommand("predict", "Predict trend types with one model or a committee");
    predict_cmd->add_option("--model", model_path)->required();
    predict_cmd->add_option("--model2", model2_path);
    predict_cmd->add_option("--in", in_path);
    predict_cmd->add_option("--out", out_path);

    auto* evaluate = app.add_subcommand("evaluate", "Repeated train/test evaluation, or scoring of given models");
    evaluate->add_option("--in", in_path);
    evaluate->add_option("--out", out_path);
    evaluate->add_option("--rep", rep)->check(CLI::IsMember({"social", "bow", "both"}));
    evaluate->add_option("--C", penalty)->check(CLI::PositiveNumber);
    evaluate->add_option("--seed", seed);
    evaluate->add_option("--train-size", train_size);
    evaluate->add_option("--repeats", repeats)->check(CLI::PositiveNumber);
    evaluate->add_option("--stopwords", stopword_files)->check(CLI::ExistingFile);
    evaluate->add_option("--model", model_path);
    evaluate->add_option("--model2", model2_path);
    evaluate->add_flag("--verbose", verbose);

    auto* analyze = app.add_subcommand("analyze", "Per-class quartiles of every feature, or top terms");
    analyze->add_option("--in", in_path);
    analyze->add_option("--out", out_path);
    analyze->add_option("--top-terms", top_k)->check(CLI::PositiveNumber);
    analyze->add_option("--stopwords", stopword_files)->check(CLI::ExistingFile);

    auto* top = app.add_subcommand("top-terms", "Most frequent terms per class");
    std::size_t k = 15;
    top->add_option("--in", in_path);
    top->add_option("--out", out_path);
    top->add_option("--k", k)->check(CLI::PositiveNumber);
    top->add_option("--stopwords", stopword_files)->check(CLI::ExistingFile);

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back(args.empty() ? "trendclass" : args.front().c_str());
    for (std::size_t i = 1; i < args.size(); ++i) argv.push_back(args[i].c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "trendclass: " << e.what() << '\n';
        return 2;
    }

    try {
        Streams io(in, out);
        if (synth->parsed()) {
            SynthOptions options{trends_per_class, tweets_per_trend, seed};
            save_corpus(generate_synthetic_corpus(default_profiles(), options), io.output(out_path));
        } else if (features->parsed()) {
            const auto corpus = load_corpus(io.input(in_path));
            auto& os = io.output(out_path);
            os << "topic,label";
            for (std::size_t f = 0; f < kSocialFeatureCount; ++f) os << ",f" << f;
            os << '\n';
            for (const auto& trend : corpus.trends) {
                const auto v = extract_features(trend);
                os << csv::field(trend.topic) << ',' << (trend.label ? to_string(*trend.label) : "");
                for (double x : v.values) os << ',' << csv::number(x);
                os << '\n';
            }
        } else if (train->parsed()) {
            const auto corpus = load_corpus(io.input(in_path));
            const auto stopwords = stopwords_with(stopword_files);
            TrainOptions options;
            options.penalty = penalty;
            options.seed = seed;
            std::vector<OneVsAllModel> models;
            for (auto r : representations(rep)) models.push_back(train_one_vs_all(corpus, r, options, stopwords));
            auto& os = io.output(out_path);
            if (models.size() == 1) {
                save_model(models.front(), os);
            } else {
                save_committee(models, os);
            }
        } else if (predict_cmd->parsed()) {
            auto models = load_models_file(model_path);
            if (!model2_path.empty()) {
                for (auto& m : load_models_file(model2_path)) models.push_back(std::move(m));
            }
            const auto corpus = load_corpus(io.input(in_path));
            auto& os = io.output(out_path);
            os << "topic,predicted,margin_N,margin_OE,margin_M,margin_C\n";
            for (const auto& trend : corpus.trends) {
                const auto decision = predict(models, trend);
                os << csv::field(trend.topic) << ',' << to_string(decision.predicted);
                for (double m : decision.sums) os << ',' << csv::number(m);
                os << '\n';
            }
        } else if (evaluate->parsed()) {
            const auto corpus = load_corpus(io.input(in_path));
            ordered_json doc;
            if (!model_path.empty()) {
                auto models = load_models_file(model_path);
                if (!model2_path.empty()) {
                    for (auto& m : load_models_file(model2_path)) models.push_back(std::move(m));
                }
                RepeatedEvaluation single;
                single.per_repeat.push_back(evaluate_models(models, corpus));
                single.mean = single.per_repeat.front();
                single.pooled = single.mean;
                doc = repeated_json(single, verbose);
            } else {
                ProtocolOptions options;
                options.train_size = train_size;
                options.repeats = repeats;
                options.seed = seed;
                options.train.penalty = penalty;
                options.train.seed = seed;
                options.stopwords = stopwords_with(stopword_files);
                const auto reps = representations(rep);
                options.social = std::find(reps.begin(), reps.end(), Representation::Social) != reps.end();
                options.bow = std::find(reps.begin(), reps.end(), Representation::BagOfWords) != reps.end();
                const auto result = run_protocol(corpus, options);
                if (reps.size() == 1) {
                    doc = repeated_json(result.social ? *result.social : *result.bow, verbose);
                } else {
                    doc["social"] = repeated_json(*result.social, verbose);
                    doc["bow"] = repeated_json(*result.bow, verbose);
                    doc["committee"] = repeated_json(*result.committee, verbose);
                }
            }
            io.output(out_path) << doc.dump(2) << '\n';
        } else if (analyze->parsed()) {
            const auto corpus = load_corpus(io.input(in_path));
            if (top_k > 0) {
                write_top_terms(corpus, top_k, stopwords_with(stopword_files), io.output(out_path));
            } else {
                write_quartiles(analyze_distributions(corpus), io.output(out_path));
            }
        } else if (top->parsed()) {
            const auto corpus = load_corpus(io.input(in_path));
            write_top_terms(corpus, k, stopwords_with(stopword_files), io.output(out_path));
        }
        io.finish();
    } catch (const std::exception& e) {
        err << "trendclass: error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}

} // namespace trendclass
