#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "emotk/emotion.hpp"

namespace emotk {

inline constexpr std::size_t kNumGoEmotionsLabels = 28;

/// GoEmotions label names indexed by their numeric id in the released TSVs
/// (0 = admiration ... 27 = neutral).
inline constexpr std::array<std::string_view, kNumGoEmotionsLabels> kGoEmotionsLabels = {
    "admiration",  "amusement",   "anger",       "annoyance", "approval",       "caring",
    "confusion",   "curiosity",   "desire",      "disappointment", "disapproval", "disgust",
    "embarrassment", "excitement", "fear",       "gratitude", "grief",          "joy",
    "love",        "nervousness", "optimism",    "pride",     "realization",    "relief",
    "remorse",     "sadness",     "surprise",    "neutral"};

std::optional<std::size_t> goemotions_id(std::string_view name) noexcept;

/// Assignment of every GoEmotions label either to one target emotion or to
/// the explicit `unmapped` set.
class TaxonomyMapping {
public:
    /// Validates coverage and uniqueness; throws MappingError naming the offending label.
    TaxonomyMapping(std::map<std::string, Emotion> entries, std::set<std::string> unmapped);

    const std::map<std::string, Emotion>& entries() const noexcept { return entries_; }
    const std::set<std::string>& unmapped() const noexcept { return unmapped_; }

    /// Target of a single source label, absent when it is in `unmapped`.
    /// Throws MappingError for names outside the GoEmotions taxonomy.
    std::optional<Emotion> target_of(std::string_view source) const;

    friend bool operator==(const TaxonomyMapping&, const TaxonomyMapping&) = default;

private:
    std::map<std::string, Emotion> entries_;
    std::set<std::string> unmapped_;
};

/// Projects the source labels through the mapping. Returns the target when
/// exactly one distinct target results, otherwise absent.
std::optional<Emotion> map_to_target(const std::set<std::string>& source_labels, const TaxonomyMapping& mapping);

/// Parses `target: source, source, ...` lines; `#` comments and blank lines are
/// skipped; an `unmapped:` line lists excluded sources.
TaxonomyMapping parse_mapping(std::string_view text, const std::string& origin = "<mapping>");

TaxonomyMapping load_mapping(const std::filesystem::path& path);

/// Canonical text form: one line per target in canonical emotion order with
/// sources sorted, followed by an `unmapped:` line. parse_mapping() inverts it.
std::string serialize_mapping(const TaxonomyMapping& mapping);

}  // namespace emotk
