#include "emotk/corpus.hpp"

#include <charconv>
#include <unordered_set>

#include "emotk/error.hpp"
#include "emotk/io.hpp"
#include "emotk/text.hpp"

namespace emotk {
namespace {

struct HeaderColumns {
    std::size_t width;
    std::vector<std::size_t> indices;
};

HeaderColumns locate_columns(const std::vector<std::string>& lines, const std::string& origin,
                             std::initializer_list<std::string_view> wanted) {
    if (lines.empty()) throw ParseError(origin, 1, "missing header row");
    const auto header = io::split_tabs(lines.front());
    HeaderColumns cols{header.size(), {}};
    for (const auto name : wanted) {
        std::size_t i = 0;
        while (i < header.size() && header[i] != name) ++i;
        if (i == header.size()) throw ParseError(origin, 1, "missing column '" + std::string(name) + "'");
        cols.indices.push_back(i);
    }
    return cols;
}

Emotion parse_label_field(std::string_view field, const std::string& origin, std::size_t line) {
    const auto label = parse_emotion(field);
    if (!label) throw LabelError(origin, line, std::string(field));
    return *label;
}

}  // namespace

std::string_view to_string(Source s) noexcept {
    switch (s) {
        case Source::original: return "original";
        case Source::aux: return "aux";
        case Source::synthetic: return "synthetic";
    }
    return "original";
}

Corpus::Corpus(std::vector<Example> examples) : examples_(std::move(examples)) {
    std::unordered_set<std::string_view> seen;
    seen.reserve(examples_.size());
    for (const auto& ex : examples_) {
        if (!seen.insert(ex.id).second) throw ConfigError("duplicate example id '" + ex.id + "'");
        ++histogram_[index_of(ex.label)];
    }
}

std::vector<Example> Corpus::of_class(Emotion e) const {
    std::vector<Example> out;
    out.reserve(count(e));
    for (const auto& ex : examples_) {
        if (ex.label == e) out.push_back(ex);
    }
    return out;
}

Example make_example(std::string id, std::string text, Emotion label, Source source) {
    const auto length = token_length(text);
    return Example{std::move(id), std::move(text), label, length, source};
}

Corpus load_wassa(const std::filesystem::path& path, std::string_view text_column, std::string_view label_column) {
    const auto origin = path.string();
    const auto lines = io::read_lines(path);
    const auto cols = locate_columns(lines, origin, {text_column, label_column});
    std::vector<Example> examples;
    examples.reserve(lines.size() - 1);
    for (std::size_t n = 1; n < lines.size(); ++n) {
        const auto fields = io::split_tabs(lines[n]);
        if (fields.size() != cols.width)
            throw ParseError(origin, n + 1,
                             "expected " + std::to_string(cols.width) + " fields, found " + std::to_string(fields.size()));
        const auto label = parse_label_field(fields[cols.indices[1]], origin, n + 1);
        examples.push_back(make_example("wassa-" + std::to_string(n - 1), preprocess(fields[cols.indices[0]]), label,
                                        Source::original));
    }
    return Corpus(std::move(examples));
}

std::vector<Emotion> load_gold_labels(const std::filesystem::path& path, std::string_view label_column) {
    const auto origin = path.string();
    const auto lines = io::read_lines(path);
    const auto cols = locate_columns(lines, origin, {label_column});
    std::vector<Emotion> labels;
    labels.reserve(lines.size() - 1);
    for (std::size_t n = 1; n < lines.size(); ++n) {
        const auto fields = io::split_tabs(lines[n]);
        if (fields.size() != cols.width)
            throw ParseError(origin, n + 1,
                             "expected " + std::to_string(cols.width) + " fields, found " + std::to_string(fields.size()));
        labels.push_back(parse_label_field(fields[cols.indices[0]], origin, n + 1));
    }
    return labels;
}

std::vector<AuxComment> load_goemotions(const std::filesystem::path& path, const TaxonomyMapping& mapping) {
    const auto origin = path.string();
    const auto lines = io::read_lines(path);
    std::vector<AuxComment> comments;
    comments.reserve(lines.size());
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto fields = io::split_tabs(lines[n]);
        if (fields.size() != 3)
            throw ParseError(origin, n + 1, "expected 3 fields, found " + std::to_string(fields.size()));
        AuxComment c;
        c.id = std::string(fields[2]);
        c.text = preprocess(fields[0]);
        c.length = token_length(c.text);
        auto ids = fields[1];
        while (true) {
            const auto comma = ids.find(',');
            const auto tok = ids.substr(0, comma);
            std::size_t value = 0;
            const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || value >= kNumGoEmotionsLabels)
                throw ParseError(origin, n + 1, "label id '" + std::string(tok) + "' outside [0, 27]");
            c.source_labels.emplace(kGoEmotionsLabels[value]);
            if (comma == std::string_view::npos) break;
            ids = ids.substr(comma + 1);
        }
        c.mapped = map_to_target(c.source_labels, mapping);
        comments.push_back(std::move(c));
    }
    return comments;
}

std::string format_dataset(const Corpus& corpus) {
    std::string out = "id\ttext\tlabel\tsource\n";
    for (const auto& ex : corpus.examples()) {
        out += ex.id;
        out += '\t';
        out += ex.text;
        out += '\t';
        out += to_string(ex.label);
        out += '\t';
        out += to_string(ex.source);
        out += '\n';
    }
    return out;
}

}  // namespace emotk
