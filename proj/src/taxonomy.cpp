#include "emotk/taxonomy.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "emotk/error.hpp"
#include "emotk/io.hpp"

namespace emotk {
namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t");
    return s.substr(first, last - first + 1);
}

}  // namespace

std::optional<std::size_t> goemotions_id(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kNumGoEmotionsLabels; ++i) {
        if (kGoEmotionsLabels[i] == name) return i;
    }
    return std::nullopt;
}

TaxonomyMapping::TaxonomyMapping(std::map<std::string, Emotion> entries, std::set<std::string> unmapped)
    : entries_(std::move(entries)), unmapped_(std::move(unmapped)) {
    for (const auto& [source, target] : entries_) {
        if (!goemotions_id(source)) throw MappingError("unknown GoEmotions label '" + source + "'");
        if (unmapped_.count(source))
            throw MappingError("GoEmotions label '" + source + "' is both mapped and unmapped");
    }
    for (const auto& source : unmapped_) {
        if (!goemotions_id(source)) throw MappingError("unknown GoEmotions label '" + source + "'");
    }
    for (const auto name : kGoEmotionsLabels) {
        const std::string key(name);
        if (!entries_.count(key) && !unmapped_.count(key))
            throw MappingError("GoEmotions label '" + key + "' is not covered by the mapping");
    }
}

std::optional<Emotion> TaxonomyMapping::target_of(std::string_view source) const {
    const std::string key(source);
    if (const auto it = entries_.find(key); it != entries_.end()) return it->second;
    if (unmapped_.count(key)) return std::nullopt;
    throw MappingError("unknown GoEmotions label '" + key + "'");
}

std::optional<Emotion> map_to_target(const std::set<std::string>& source_labels, const TaxonomyMapping& mapping) {
    std::optional<Emotion> result;
    bool ambiguous = false;
    for (const auto& source : source_labels) {
        const auto target = mapping.target_of(source);
        if (!target) continue;
        if (result && *result != *target) ambiguous = true;
        result = target;
    }
    if (ambiguous) return std::nullopt;
    return result;
}

TaxonomyMapping parse_mapping(std::string_view text, const std::string& origin) {
    std::map<std::string, Emotion> entries;
    std::set<std::string> unmapped;
    const auto lines = io::split_lines(text);
    for (std::size_t n = 0; n < lines.size(); ++n) {
        const auto line = trim(lines[n]);
        if (line.empty() || line.front() == '#') continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError(origin, n + 1, "expected 'target: sources'");
        const auto head = trim(line.substr(0, colon));
        const bool is_unmapped = head == "unmapped";
        const auto target = parse_emotion(head);
        if (!is_unmapped && !target) throw MappingError(origin + ":" + std::to_string(n + 1) +
                                                        ": unknown target emotion '" + std::string(head) + "'");
        auto rest = line.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto source = std::string(trim(rest.substr(0, comma)));
            rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
            if (source.empty()) continue;
            if (!goemotions_id(source))
                throw MappingError(origin + ":" + std::to_string(n + 1) + ": unknown GoEmotions label '" +
                                   source + "'");
            if (entries.count(source) || unmapped.count(source))
                throw MappingError(origin + ":" + std::to_string(n + 1) + ": duplicate assignment of '" +
                                   source + "'");
            if (is_unmapped) {
                unmapped.insert(source);
            } else {
                entries.emplace(source, *target);
            }
        }
    }
    return TaxonomyMapping(std::move(entries), std::move(unmapped));
}

TaxonomyMapping load_mapping(const std::filesystem::path& path) {
    return parse_mapping(io::read_file(path), path.string());
}

std::string serialize_mapping(const TaxonomyMapping& mapping) {
    std::array<std::vector<std::string>, kNumEmotions> buckets;
    for (const auto& [source, target] : mapping.entries()) buckets[index_of(target)].push_back(source);
    std::ostringstream out;
    const auto write_line = [&out](std::string_view head, const auto& sources) {
        out << head << ':';
        bool first = true;
        for (const auto& s : sources) {
            out << (first ? " " : ", ") << s;
            first = false;
        }
        out << '\n';
    };
    for (const auto e : kAllEmotions) write_line(to_string(e), buckets[index_of(e)]);
    write_line("unmapped", mapping.unmapped());
    return out.str();
}

}  // namespace emotk
