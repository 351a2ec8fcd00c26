#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "emotk/corpus.hpp"
#include "emotk/rng.hpp"

namespace emotk {

enum class Method : std::uint8_t { aous, rso, aos };

std::string_view to_string(Method m) noexcept;
std::optional<Method> parse_method(std::string_view name) noexcept;

struct SamplerSpec {
    Method method = Method::aous;
    /// Per-class count for AOUS.
    std::size_t threshold = 400;
    std::uint64_t seed = 3407;
    /// RSO/AOS target; defaults to the largest class count.
    std::optional<std::size_t> target_per_class;
};

/// Sorted (non-decreasing) token lengths.
class LengthDistribution {
public:
    explicit LengthDistribution(std::vector<std::size_t> lengths);
    static LengthDistribution of(const Corpus& corpus);

    const std::vector<std::size_t>& lengths() const noexcept { return lengths_; }
    bool empty() const noexcept { return lengths_.empty(); }

private:
    std::vector<std::size_t> lengths_;
};

/// Aux comments whose mapped label is `label`, in input order.
std::vector<AuxComment> aux_pool(std::span<const AuxComment> aux, Emotion label);

/// The k longest comments, ordered by length descending then id ascending.
/// Throws DeficitError naming `label` and the shortfall when k > pool size.
std::vector<AuxComment> longest_k(std::span<const AuxComment> pool, std::size_t k, Emotion label);

/// Uniform k-subset without replacement (partial Fisher-Yates over indices,
/// j = i + rng.below(n - i)); survivors keep their original relative order.
std::vector<Example> undersample(std::span<const Example> examples, std::size_t k, Rng& rng);

/// target_i = lengths[floor((i + 0.5) * n / m)] for i in [0, m).
std::vector<std::size_t> systematic_targets(const LengthDistribution& dist, std::size_t m);

/// Concatenates uniformly drawn comments (urn without replacement, refilled in
/// pool order once exhausted) with single spaces until the token length
/// reaches `target_len`. Comments with zero length are never drawn.
Example synth_essay(std::span<const AuxComment> pool, std::size_t target_len, Rng& rng, Emotion label,
                    std::string id);

std::string synthetic_id(Emotion label, std::size_t sequence, std::uint64_t seed);

Corpus aous(const Corpus& corpus, std::span<const AuxComment> aux, const SamplerSpec& spec);
Corpus aos(const Corpus& corpus, std::span<const AuxComment> aux, const SamplerSpec& spec);
Corpus rso(const Corpus& corpus, std::span<const AuxComment> aux, const SamplerSpec& spec);

/// Dispatches on spec.method.
Corpus augment(const Corpus& corpus, std::span<const AuxComment> aux, const SamplerSpec& spec);

}  // namespace emotk
