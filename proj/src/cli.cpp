#include "emotk/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "emotk/corpus.hpp"
#include "emotk/ensemble.hpp"
#include "emotk/error.hpp"
#include "emotk/io.hpp"
#include "emotk/manifest.hpp"
#include "emotk/metrics.hpp"
#include "emotk/samplers.hpp"

#ifndef EMOTK_DEFAULT_MAPPING
#define EMOTK_DEFAULT_MAPPING "data/ekman_mapping.txt"
#endif

namespace emotk::cli {
namespace {

struct AugmentOptions {
    std::string train;
    std::string aux;
    std::string mapping = EMOTK_DEFAULT_MAPPING;
    std::string method;
    std::size_t threshold = 400;
    std::optional<std::size_t> target;
    std::uint64_t seed = 3407;
    std::string out;
    std::string text_column = "essay";
    std::string label_column = "emotion";
};

struct VoteOptions {
    std::vector<std::string> preds;
    std::vector<std::string> priority;
    std::string out;
};

struct EvalOptions {
    std::string gold;
    std::string pred;
    std::string out_report;
    std::string out_confusion;
    bool normalized = false;
    std::string label_column = "emotion";
};

struct StatsOptions {
    std::string gold;
    std::vector<std::string> preds;
    std::string out;
    std::string label_column = "emotion";
};

// `id=path` names the model explicitly; a bare path uses the file stem.
std::pair<std::string, std::string> split_model_arg(const std::string& arg) {
    const auto eq = arg.find('=');
    if (eq != std::string::npos && eq > 0) return {arg.substr(0, eq), arg.substr(eq + 1)};
    return {std::filesystem::path(arg).stem().string(), arg};
}

std::vector<PredictionSet> load_prediction_args(const std::vector<std::string>& args, RunManifest& manifest) {
    std::vector<PredictionSet> sets;
    for (const auto& arg : args) {
        auto [id, path] = split_model_arg(arg);
        sets.push_back(load_predictions(path, id));
        manifest.add_input(path);
    }
    return sets;
}

void write_with_manifest(const std::string& out, const std::string& contents, RunManifest& manifest,
                         const std::vector<std::pair<std::string, std::string>>& extra = {}) {
    // Everything is rendered before the first write so failures leave nothing behind.
    manifest.output_paths.push_back(out);
    for (const auto& [path, _] : extra) manifest.output_paths.push_back(path);
    const auto manifest_text = manifest.to_json();
    io::write_file_atomic(out, contents);
    for (const auto& [path, text] : extra) io::write_file_atomic(path, text);
    io::write_file_atomic(manifest_path_for(out), manifest_text);
}

void print_histogram(std::ostream& out, const Histogram& h) {
    std::size_t total = 0;
    for (const auto e : kAllEmotions) {
        out << to_string(e) << '\t' << h[index_of(e)] << '\n';
        total += h[index_of(e)];
    }
    out << "total\t" << total << '\n';
}

nlohmann::ordered_json histogram_json(const Histogram& h) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto e : kAllEmotions) j[std::string(to_string(e))] = h[index_of(e)];
    return j;
}

int run_augment(const AugmentOptions& opt, std::ostream& out) {
    const auto method = parse_method(opt.method);
    if (!method) throw ConfigError("unknown method '" + opt.method + "'");
    SamplerSpec spec{*method, opt.threshold, opt.seed, opt.target};

    RunManifest manifest;
    manifest.subcommand = "augment";
    const auto mapping = load_mapping(opt.mapping);
    const auto corpus = load_wassa(opt.train, opt.text_column, opt.label_column);
    const auto aux = load_goemotions(opt.aux, mapping);
    manifest.add_input(opt.train);
    manifest.add_input(opt.aux);
    manifest.add_input(opt.mapping);

    const auto result = augment(corpus, aux, spec);

    manifest.config = {{"train", opt.train},
                       {"aux", opt.aux},
                       {"mapping", opt.mapping},
                       {"method", to_string(spec.method)},
                       {"threshold", spec.threshold},
                       {"target", opt.target ? nlohmann::ordered_json(*opt.target) : nlohmann::ordered_json()},
                       {"seed", spec.seed},
                       {"text_column", opt.text_column},
                       {"label_column", opt.label_column},
                       {"out", opt.out}};
    manifest.summary = {{"input_counts", histogram_json(corpus.histogram())},
                        {"output_counts", histogram_json(result.histogram())},
                        {"total", result.size()}};
    write_with_manifest(opt.out, format_dataset(result), manifest);
    print_histogram(out, result.histogram());
    return kOk;
}

int run_vote(const VoteOptions& opt, std::ostream& out) {
    RunManifest manifest;
    manifest.subcommand = "vote";
    const auto sets = load_prediction_args(opt.preds, manifest);
    std::vector<std::string> ids;
    for (const auto& s : sets) ids.push_back(s.model_id);
    const auto policy = opt.priority.empty() ? default_tie_policy(ids) : TiePolicy(opt.priority);
    policy.require_permutation_of(ids);

    const auto result = ensemble_predictions(sets, policy);
    manifest.config = {{"pred", opt.preds}, {"priority", policy.order()}, {"out", opt.out}};
    manifest.summary = {{"n", result.size()}};
    write_with_manifest(opt.out, format_predictions(result), manifest);
    out << "wrote " << result.size() << " ensemble predictions to " << opt.out << '\n';
    return kOk;
}

std::vector<Emotion> load_gold(const std::string& path, const std::string& column) {
    auto gold = load_gold_labels(path, column);
    if (gold.empty()) throw ParseError(path, 0, "gold file has no rows");
    return gold;
}

int run_eval(const EvalOptions& opt, std::ostream& out) {
    RunManifest manifest;
    manifest.subcommand = "eval";
    const auto gold = load_gold(opt.gold, opt.label_column);
    const auto pred = load_predictions(opt.pred, split_model_arg(opt.pred).first);
    manifest.add_input(opt.gold);
    manifest.add_input(opt.pred);

    const auto cm = confusion_matrix(gold, pred.labels);
    const auto report = evaluate(cm);
    manifest.config = {{"gold", opt.gold},
                       {"pred", opt.pred},
                       {"label_column", opt.label_column},
                       {"normalized", opt.normalized},
                       {"out_report", opt.out_report},
                       {"out_confusion", opt.out_confusion}};
    manifest.summary = {{"macro_f1", round_to(report.macro_f1)}, {"n", report.n}};
    write_with_manifest(opt.out_report, format_report_json(report), manifest,
                        {{opt.out_confusion, format_confusion_tsv(cm, opt.normalized)}});
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", round_to(report.macro_f1));
    out << "macro_f1\t" << buf << '\n';
    return kOk;
}

int run_stats(const StatsOptions& opt, std::ostream& out) {
    RunManifest manifest;
    manifest.subcommand = "stats";
    const auto gold = load_gold(opt.gold, opt.label_column);
    manifest.add_input(opt.gold);
    const auto sets = load_prediction_args(opt.preds, manifest);

    std::vector<ConfusionMatrix> cms;
    std::vector<std::string> ids;
    for (const auto& s : sets) {
        cms.push_back(confusion_matrix(gold, s.labels));
        ids.push_back(s.model_id);
    }
    const auto stats = tp_stats(cms);
    manifest.config = {{"gold", opt.gold}, {"pred", opt.preds}, {"label_column", opt.label_column}, {"out", opt.out}};
    manifest.summary = {{"models", ids.size()}};
    write_with_manifest(opt.out, format_tp_stats_json(stats, ids), manifest);
    out << "label\tmean\tsigma\n";
    for (const auto e : kAllEmotions) {
        const auto& s = stats.per_class[index_of(e)];
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s\t%.4f\t%.4f\n", std::string(to_string(e)).c_str(), round_to(s.mean),
                      round_to(s.sigma));
        out << buf;
    }
    return kOk;
}

// Translates library exceptions into the documented exit codes. A bad label
// in a training file is a parse failure for `augment`, so the code is per-command.
int guarded(const std::function<int()>& body, std::ostream& err, int label_code = kBadLabel) {
    try {
        return body();
    } catch (const LabelError& e) {
        err << "error: " << e.what() << '\n';
        return label_code;
    } catch (const AlignmentError& e) {
        err << "error: " << e.what() << '\n';
        return kMisaligned;
    } catch (const DeficitError& e) {
        err << "error: " << e.what() << '\n';
        return kDeficit;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidFlags;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kIoOrParse;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kIoOrParse;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Emotion corpus rebalancing, majority-vote ensembling and evaluation", "emotk"};
    app.require_subcommand(1);

    AugmentOptions aug;
    auto* augment_cmd = app.add_subcommand("augment", "Rebalance a WASSA training file with GoEmotions comments");
    augment_cmd->add_option("--train", aug.train, "WASSA training TSV (header row)")->required();
    augment_cmd->add_option("--aux", aug.aux, "GoEmotions TSV (text, label ids, comment id)")->required();
    augment_cmd->add_option("--mapping", aug.mapping, "GoEmotions-to-target taxonomy mapping")->capture_default_str();
    augment_cmd->add_option("--method", aug.method, "Sampler")
        ->required()
        ->check(CLI::IsMember({"aous", "rso", "aos"}));
    augment_cmd->add_option("--threshold", aug.threshold, "AOUS examples per class")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    augment_cmd->add_option("--target", aug.target, "RSO/AOS examples per class (default: largest class)")
        ->check(CLI::PositiveNumber);
    augment_cmd->add_option("--seed", aug.seed, "PRNG seed")->capture_default_str();
    augment_cmd->add_option("--out", aug.out, "Output dataset TSV")->required();
    augment_cmd->add_option("--text-column", aug.text_column)->capture_default_str();
    augment_cmd->add_option("--label-column", aug.label_column)->capture_default_str();

    VoteOptions vote;
    auto* vote_cmd = app.add_subcommand("vote", "Majority-vote ensemble of aligned prediction files");
    vote_cmd->add_option("--pred", vote.preds, "Prediction file, optionally as id=path")->required();
    vote_cmd->add_option("--priority", vote.priority, "Model ids, highest tie-break priority first");
    vote_cmd->add_option("--out", vote.out, "Output prediction file")->required();

    EvalOptions ev;
    auto* eval_cmd = app.add_subcommand("eval", "Macro F1 and confusion matrix against a gold TSV");
    eval_cmd->add_option("--gold", ev.gold, "Gold TSV with a label column")->required();
    eval_cmd->add_option("--pred", ev.pred, "Prediction file")->required();
    eval_cmd->add_option("--out-report", ev.out_report, "Report JSON")->required();
    eval_cmd->add_option("--out-confusion", ev.out_confusion, "Confusion TSV")->required();
    eval_cmd->add_flag("--normalized", ev.normalized, "Row-normalize the confusion TSV");
    eval_cmd->add_option("--label-column", ev.label_column)->capture_default_str();

    StatsOptions st;
    auto* stats_cmd = app.add_subcommand("stats", "Per-class true-positive mean and sigma across models");
    stats_cmd->add_option("--gold", st.gold, "Gold TSV with a label column")->required();
    stats_cmd->add_option("--pred", st.preds, "Prediction file per model, optionally as id=path")->required();
    stats_cmd->add_option("--out", st.out, "TP statistics JSON")->required();
    stats_cmd->add_option("--label-column", st.label_column)->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "error: " << e.what() << '\n' << app.help();
        return kInvalidFlags;
    }

    if (*augment_cmd) return guarded([&] { return run_augment(aug, out); }, err, kIoOrParse);
    if (*vote_cmd) return guarded([&] { return run_vote(vote, out); }, err);
    if (*eval_cmd) return guarded([&] { return run_eval(ev, out); }, err);
    return guarded([&] { return run_stats(st, out); }, err);
}

}  // namespace emotk::cli
