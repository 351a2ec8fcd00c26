#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emotk/emotion.hpp"

namespace emotk {

/// One model's labels, aligned row-for-row with a gold file.
struct PredictionSet {
    std::string model_id;
    std::vector<Emotion> labels;

    std::size_t size() const noexcept { return labels.size(); }
};

/// Model ids from highest to lowest priority; decides split votes.
class TiePolicy {
public:
    explicit TiePolicy(std::vector<std::string> model_priority);

    const std::vector<std::string>& order() const noexcept { return order_; }
    /// 0 is highest priority. Throws ConfigError for an unknown id.
    std::size_t rank(const std::string& model_id) const;

    /// Throws ConfigError unless the policy is exactly a permutation of `model_ids`.
    void require_permutation_of(std::span<const std::string> model_ids) const;

private:
    std::vector<std::string> order_;
};

/// Validation-F1 ranking of the four shortlisted models, strongest first.
inline const std::vector<std::string>& reference_priority() {
    static const std::vector<std::string> order = {"electra-aous", "bert-aous", "electra-rso", "electra-aos"};
    return order;
}

/// Known ids in reference_priority() order first, then the rest in input order.
TiePolicy default_tie_policy(std::span<const std::string> model_ids);

using Vote = std::pair<std::string, Emotion>;

/// Plurality label; a tie among top labels goes to the label voted by the
/// highest-priority model that voted for any of the tied labels.
Emotion majority_vote(std::span<const Vote> votes, const TiePolicy& policy);

/// Element-wise majority vote; result model id is "ensemble".
PredictionSet ensemble_predictions(std::span<const PredictionSet> sets, const TiePolicy& policy);

/// One lowercase label per line. Throws LabelError naming the line.
PredictionSet load_predictions(const std::filesystem::path& path, std::string model_id);

std::string format_predictions(const PredictionSet& set);

}  // namespace emotk
