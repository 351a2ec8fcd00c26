#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "emotk/emotion.hpp"

namespace emotk {

template <typename Scalar>
using EmotionMatrix = Eigen::Matrix<Scalar, static_cast<int>(kNumEmotions), static_cast<int>(kNumEmotions),
                                    Eigen::RowMajor>;

using CountMatrix = EmotionMatrix<std::int64_t>;

/// Counts indexed (true label, predicted label) in canonical order.
class ConfusionMatrix {
public:
    ConfusionMatrix() : counts_(CountMatrix::Zero()) {}
    explicit ConfusionMatrix(const CountMatrix& counts);

    const CountMatrix& counts() const noexcept { return counts_; }
    std::int64_t n() const noexcept { return counts_.sum(); }
    std::int64_t operator()(Emotion truth, Emotion pred) const {
        return counts_(static_cast<Eigen::Index>(index_of(truth)), static_cast<Eigen::Index>(index_of(pred)));
    }
    std::int64_t tp(Emotion e) const { return (*this)(e, e); }
    std::int64_t support(Emotion e) const { return counts_.row(static_cast<Eigen::Index>(index_of(e))).sum(); }
    std::int64_t predicted(Emotion e) const { return counts_.col(static_cast<Eigen::Index>(index_of(e))).sum(); }

private:
    CountMatrix counts_;
};

/// Throws AlignmentError when lengths differ.
ConfusionMatrix confusion_matrix(std::span<const Emotion> gold, std::span<const Emotion> pred);

/// Each row divided by its sum; zero-support rows stay zero.
template <typename Scalar = double>
EmotionMatrix<Scalar> normalize_rows(const ConfusionMatrix& cm) {
    const EmotionMatrix<Scalar> counts = cm.counts().template cast<Scalar>();
    EmotionMatrix<Scalar> out = EmotionMatrix<Scalar>::Zero();
    for (Eigen::Index r = 0; r < counts.rows(); ++r) {
        const Scalar total = counts.row(r).sum();
        if (total != Scalar(0)) out.row(r) = counts.row(r) / total;
    }
    return out;
}

struct ClassScores {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::int64_t support = 0;
    std::int64_t tp = 0;
};

struct EvalReport {
    double macro_f1 = 0.0;
    std::array<ClassScores, kNumEmotions> per_class{};
    /// Labels present in gold or predictions; the macro average runs over these.
    std::vector<Emotion> labels_used;
    std::int64_t n = 0;
};

/// precision = TP/(TP+FP), recall = TP/(TP+FN), F1 = 0 when P + R = 0.
/// Throws ConfigError on an empty matrix.
EvalReport evaluate(const ConfusionMatrix& cm);

double macro_f1(const ConfusionMatrix& cm);

struct TpClassStats {
    std::vector<std::int64_t> tp_values;  // one per model, input order
    double mean = 0.0;
    double sigma = 0.0;  // population standard deviation
};

struct TpStats {
    std::array<TpClassStats, kNumEmotions> per_class{};
};

/// True positives per class across models. Throws ConfigError on an empty list.
TpStats tp_stats(std::span<const ConfusionMatrix> cms);

/// Rounds half away from zero to `places` decimals for report output.
double round_to(double value, int places = 4);

/// Header `gold` + predicted labels, one row per true label. Normalized cells
/// print with 4 decimals.
std::string format_confusion_tsv(const ConfusionMatrix& cm, bool normalized);

std::string format_report_json(const EvalReport& report);

std::string format_tp_stats_json(const TpStats& stats, std::span<const std::string> model_ids);

}  // namespace emotk
