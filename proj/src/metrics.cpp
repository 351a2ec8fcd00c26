#include "emotk/metrics.hpp"

#include <cmath>
#include <cstdio>

#include "json.hpp"

#include "emotk/error.hpp"

namespace emotk {

ConfusionMatrix::ConfusionMatrix(const CountMatrix& counts) : counts_(counts) {
    if ((counts_.array() < 0).any()) throw ConfigError("confusion counts must be non-negative");
}

ConfusionMatrix confusion_matrix(std::span<const Emotion> gold, std::span<const Emotion> pred) {
    if (gold.size() != pred.size())
        throw AlignmentError("gold has " + std::to_string(gold.size()) + " rows but predictions have " +
                             std::to_string(pred.size()));
    CountMatrix counts = CountMatrix::Zero();
    for (std::size_t i = 0; i < gold.size(); ++i) {
        ++counts(static_cast<Eigen::Index>(index_of(gold[i])), static_cast<Eigen::Index>(index_of(pred[i])));
    }
    return ConfusionMatrix(counts);
}

EvalReport evaluate(const ConfusionMatrix& cm) {
    if (cm.n() == 0) throw ConfigError("macro F1 is undefined for an empty confusion matrix");
    EvalReport report;
    report.n = cm.n();
    double f1_sum = 0.0;
    for (const auto e : kAllEmotions) {
        auto& s = report.per_class[index_of(e)];
        s.tp = cm.tp(e);
        s.support = cm.support(e);
        const auto predicted = cm.predicted(e);
        const auto tp = static_cast<double>(s.tp);
        s.precision = predicted ? tp / static_cast<double>(predicted) : 0.0;
        s.recall = s.support ? tp / static_cast<double>(s.support) : 0.0;
        s.f1 = s.precision + s.recall > 0.0 ? 2.0 * s.precision * s.recall / (s.precision + s.recall) : 0.0;
        if (s.support || predicted) {
            report.labels_used.push_back(e);
            f1_sum += s.f1;
        }
    }
    report.macro_f1 = f1_sum / static_cast<double>(report.labels_used.size());
    return report;
}

double macro_f1(const ConfusionMatrix& cm) { return evaluate(cm).macro_f1; }

TpStats tp_stats(std::span<const ConfusionMatrix> cms) {
    if (cms.empty()) throw ConfigError("TP statistics need at least one confusion matrix");
    TpStats stats;
    const auto m = static_cast<double>(cms.size());
    for (const auto e : kAllEmotions) {
        auto& s = stats.per_class[index_of(e)];
        double sum = 0.0;
        for (const auto& cm : cms) {
            s.tp_values.push_back(cm.tp(e));
            sum += static_cast<double>(cm.tp(e));
        }
        s.mean = sum / m;
        double sq = 0.0;
        for (const auto v : s.tp_values) sq += (static_cast<double>(v) - s.mean) * (static_cast<double>(v) - s.mean);
        s.sigma = std::sqrt(sq / m);
    }
    return stats;
}

double round_to(double value, int places) {
    const double scale = std::pow(10.0, places);
    return std::round(value * scale) / scale;
}

std::string format_confusion_tsv(const ConfusionMatrix& cm, bool normalized) {
    std::string out = "gold";
    for (const auto e : kAllEmotions) {
        out += '\t';
        out += to_string(e);
    }
    out += '\n';
    const auto rates = normalize_rows(cm);
    for (const auto t : kAllEmotions) {
        out += to_string(t);
        for (const auto p : kAllEmotions) {
            out += '\t';
            if (normalized) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.4f",
                              rates(static_cast<Eigen::Index>(index_of(t)), static_cast<Eigen::Index>(index_of(p))));
                out += buf;
            } else {
                out += std::to_string(cm(t, p));
            }
        }
        out += '\n';
    }
    return out;
}

std::string format_report_json(const EvalReport& report) {
    nlohmann::ordered_json j;
    j["macro_f1"] = round_to(report.macro_f1);
    auto& per_class = j["per_class"];
    per_class = nlohmann::ordered_json::object();
    for (const auto e : kAllEmotions) {
        const auto& s = report.per_class[index_of(e)];
        per_class[std::string(to_string(e))] = {{"precision", round_to(s.precision)},
                                                {"recall", round_to(s.recall)},
                                                {"f1", round_to(s.f1)},
                                                {"support", s.support},
                                                {"tp", s.tp}};
    }
    auto& used = j["labels_used"];
    used = nlohmann::ordered_json::array();
    for (const auto e : report.labels_used) used.push_back(std::string(to_string(e)));
    j["n"] = report.n;
    return j.dump(2) + "\n";
}

std::string format_tp_stats_json(const TpStats& stats, std::span<const std::string> model_ids) {
    nlohmann::ordered_json j;
    j["models"] = std::vector<std::string>(model_ids.begin(), model_ids.end());
    auto& per_class = j["per_class"];
    per_class = nlohmann::ordered_json::object();
    for (const auto e : kAllEmotions) {
        const auto& s = stats.per_class[index_of(e)];
        per_class[std::string(to_string(e))] = {
            {"tp", s.tp_values}, {"mean", round_to(s.mean)}, {"sigma", round_to(s.sigma)}};
    }
    return j.dump(2) + "\n";
}

}  // namespace emotk
