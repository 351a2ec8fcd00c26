#include "emotk/ensemble.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>

#include "emotk/error.hpp"
#include "emotk/io.hpp"

namespace emotk {

TiePolicy::TiePolicy(std::vector<std::string> model_priority) : order_(std::move(model_priority)) {
    std::set<std::string> seen;
    for (const auto& id : order_) {
        if (!seen.insert(id).second) throw ConfigError("model id '" + id + "' repeated in tie policy");
    }
}

std::size_t TiePolicy::rank(const std::string& model_id) const {
    const auto it = std::find(order_.begin(), order_.end(), model_id);
    if (it == order_.end()) throw ConfigError("model id '" + model_id + "' is not in the tie policy");
    return static_cast<std::size_t>(it - order_.begin());
}

void TiePolicy::require_permutation_of(std::span<const std::string> model_ids) const {
    const std::set<std::string> given(model_ids.begin(), model_ids.end());
    if (given.size() != model_ids.size()) throw ConfigError("duplicate model ids among predictions");
    const std::set<std::string> ours(order_.begin(), order_.end());
    if (given != ours) throw ConfigError("tie policy must list exactly the participating model ids");
}

TiePolicy default_tie_policy(std::span<const std::string> model_ids) {
    std::vector<std::string> order;
    for (const auto& known : reference_priority()) {
        if (std::find(model_ids.begin(), model_ids.end(), known) != model_ids.end()) order.push_back(known);
    }
    for (const auto& id : model_ids) {
        if (std::find(order.begin(), order.end(), id) == order.end()) order.push_back(id);
    }
    return TiePolicy(std::move(order));
}

Emotion majority_vote(std::span<const Vote> votes, const TiePolicy& policy) {
    if (votes.empty()) throw ConfigError("majority vote needs at least one vote");
    std::array<std::size_t, kNumEmotions> counts{};
    for (const auto& [model, label] : votes) ++counts[index_of(label)];
    const auto top = *std::max_element(counts.begin(), counts.end());

    std::size_t best_rank = std::numeric_limits<std::size_t>::max();
    Emotion winner{};
    for (const auto& [model, label] : votes) {
        const auto r = policy.rank(model);
        if (counts[index_of(label)] == top && r < best_rank) {
            best_rank = r;
            winner = label;
        }
    }
    return winner;
}

PredictionSet ensemble_predictions(std::span<const PredictionSet> sets, const TiePolicy& policy) {
    if (sets.empty()) throw ConfigError("ensemble needs at least one prediction set");
    const auto n = sets.front().size();
    for (const auto& s : sets) {
        if (s.size() != n) {
            std::string msg = "prediction sets differ in length:";
            for (const auto& t : sets) msg += " " + t.model_id + "=" + std::to_string(t.size());
            throw AlignmentError(msg);
        }
    }
    PredictionSet out{"ensemble", {}};
    out.labels.reserve(n);
    std::vector<Vote> votes(sets.size());
    for (std::size_t row = 0; row < n; ++row) {
        for (std::size_t m = 0; m < sets.size(); ++m) votes[m] = {sets[m].model_id, sets[m].labels[row]};
        out.labels.push_back(majority_vote(votes, policy));
    }
    return out;
}

PredictionSet load_predictions(const std::filesystem::path& path, std::string model_id) {
    const auto lines = io::read_lines(path);
    PredictionSet set{std::move(model_id), {}};
    set.labels.reserve(lines.size());
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto label = parse_emotion(lines[n]);
        if (!label) throw LabelError(path.string(), n + 1, lines[n]);
        set.labels.push_back(*label);
    }
    return set;
}

std::string format_predictions(const PredictionSet& set) {
    std::string out;
    for (const auto label : set.labels) {
        out += to_string(label);
        out += '\n';
    }
    return out;
}

}  // namespace emotk
