#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "emotk/emotion.hpp"
#include "emotk/taxonomy.hpp"

namespace emotk {

enum class Source : std::uint8_t { original, aux, synthetic };

std::string_view to_string(Source s) noexcept;

struct Example {
    std::string id;
    std::string text;
    Emotion label{};
    std::size_t length = 0;  // whitespace tokens of `text`
    Source source = Source::original;

    friend bool operator==(const Example&, const Example&) = default;
};

using Histogram = std::array<std::size_t, kNumEmotions>;

/// Ordered examples with unique ids and a histogram kept in sync.
class Corpus {
public:
    Corpus() = default;
    /// Throws ConfigError on a duplicate id.
    explicit Corpus(std::vector<Example> examples);

    const std::vector<Example>& examples() const noexcept { return examples_; }
    const Histogram& histogram() const noexcept { return histogram_; }
    std::size_t size() const noexcept { return examples_.size(); }
    std::size_t count(Emotion e) const noexcept { return histogram_[index_of(e)]; }

    /// Examples of one class, in corpus order.
    std::vector<Example> of_class(Emotion e) const;

    friend bool operator==(const Corpus&, const Corpus&) = default;

private:
    std::vector<Example> examples_;
    Histogram histogram_{};
};

struct AuxComment {
    std::string id;
    std::string text;
    std::set<std::string> source_labels;
    std::optional<Emotion> mapped;
    std::size_t length = 0;

    friend bool operator==(const AuxComment&, const AuxComment&) = default;
};

/// Builds an Example from already-preprocessed text.
Example make_example(std::string id, std::string text, Emotion label, Source source);

/// Loads a header-bearing WASSA TSV. Text is preprocessed; ids are "wassa-<row>".
Corpus load_wassa(const std::filesystem::path& path, std::string_view text_column = "essay",
                  std::string_view label_column = "emotion");

/// Reads only the label column of a header-bearing TSV (gold files).
std::vector<Emotion> load_gold_labels(const std::filesystem::path& path, std::string_view label_column = "emotion");

/// Loads a headerless GoEmotions TSV (text, comma-separated label ids, comment id).
std::vector<AuxComment> load_goemotions(const std::filesystem::path& path, const TaxonomyMapping& mapping);

/// Dataset TSV: header `id\ttext\tlabel\tsource`, one row per example, LF endings.
std::string format_dataset(const Corpus& corpus);

}  // namespace emotk
