#include "emotk/samplers.hpp"

#include <algorithm>
#include <numeric>

#include "emotk/error.hpp"

namespace emotk {
namespace {

void require_method(const SamplerSpec& spec, Method expected) {
    if (spec.method != expected)
        throw ConfigError("sampler spec is for " + std::string(to_string(spec.method)) + ", not " +
                          std::string(to_string(expected)));
}

std::size_t largest_class(const Corpus& corpus) {
    const auto& h = corpus.histogram();
    return *std::max_element(h.begin(), h.end());
}

std::size_t resolve_target(const Corpus& corpus, const SamplerSpec& spec) {
    const auto largest = largest_class(corpus);
    const auto target = spec.target_per_class.value_or(largest);
    if (target == 0) throw ConfigError("target per class must be positive");
    if (target < largest)
        throw ConfigError("target per class " + std::to_string(target) + " is below the largest class count " +
                          std::to_string(largest) + "; oversampling never removes examples");
    return target;
}

Example aux_example(const AuxComment& c, Emotion label) {
    return Example{"aux-" + c.id, c.text, label, c.length, Source::aux};
}

// Shared shape of AOS and AOUS: originals per class (optionally reduced), then
// the longest aux comments to fill the remainder.
Corpus top_up_with_longest(const Corpus& corpus, std::span<const AuxComment> aux, std::size_t target,
                           const SamplerSpec& spec, bool allow_undersampling) {
    std::vector<Example> out;
    out.reserve(target * kNumEmotions);
    for (const auto label : kAllEmotions) {
        auto members = corpus.of_class(label);
        if (members.size() > target) {
            if (!allow_undersampling) throw ConfigError("class above target");
            auto rng = Rng::for_stream(spec.seed, index_of(label));
            members = undersample(members, target, rng);
        }
        const auto deficit = target - members.size();
        std::move(members.begin(), members.end(), std::back_inserter(out));
        if (deficit == 0) continue;
        const auto pool = aux_pool(aux, label);
        for (const auto& c : longest_k(pool, deficit, label)) out.push_back(aux_example(c, label));
    }
    return Corpus(std::move(out));
}

}  // namespace

std::string_view to_string(Method m) noexcept {
    switch (m) {
        case Method::aous: return "aous";
        case Method::rso: return "rso";
        case Method::aos: return "aos";
    }
    return "aous";
}

std::optional<Method> parse_method(std::string_view name) noexcept {
    if (name == "aous") return Method::aous;
    if (name == "rso") return Method::rso;
    if (name == "aos") return Method::aos;
    return std::nullopt;
}

LengthDistribution::LengthDistribution(std::vector<std::size_t> lengths) : lengths_(std::move(lengths)) {
    std::sort(lengths_.begin(), lengths_.end());
}

LengthDistribution LengthDistribution::of(const Corpus& corpus) {
    std::vector<std::size_t> lengths;
    lengths.reserve(corpus.size());
    for (const auto& ex : corpus.examples()) lengths.push_back(ex.length);
    return LengthDistribution(std::move(lengths));
}

std::vector<AuxComment> aux_pool(std::span<const AuxComment> aux, Emotion label) {
    std::vector<AuxComment> pool;
    for (const auto& c : aux) {
        if (c.mapped == label) pool.push_back(c);
    }
    return pool;
}

std::vector<AuxComment> longest_k(std::span<const AuxComment> pool, std::size_t k, Emotion label) {
    if (k > pool.size())
        throw DeficitError("class '" + std::string(to_string(label)) + "' needs " + std::to_string(k) +
                           " auxiliary comments but the pool has " + std::to_string(pool.size()) + " (short by " +
                           std::to_string(k - pool.size()) + ")");
    std::vector<const AuxComment*> order;
    order.reserve(pool.size());
    for (const auto& c : pool) order.push_back(&c);
    const auto longer = [](const AuxComment* a, const AuxComment* b) {
        if (a->length != b->length) return a->length > b->length;
        return a->id < b->id;
    };
    std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(k), order.end(), longer);
    std::vector<AuxComment> out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(*order[i]);
    return out;
}

std::vector<Example> undersample(std::span<const Example> examples, std::size_t k, Rng& rng) {
    const auto n = examples.size();
    if (k > n)
        throw ConfigError("cannot undersample " + std::to_string(n) + " examples to " + std::to_string(k));
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < k; ++i) {
        const auto j = i + static_cast<std::size_t>(rng.below(n - i));
        std::swap(idx[i], idx[j]);
    }
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    std::vector<Example> out;
    out.reserve(k);
    for (const auto i : idx) out.push_back(examples[i]);
    return out;
}

std::vector<std::size_t> systematic_targets(const LengthDistribution& dist, std::size_t m) {
    if (dist.empty()) throw ConfigError("systematic sampling over an empty length distribution");
    if (m == 0) throw ConfigError("systematic sampling needs m >= 1");
    const auto n = dist.lengths().size();
    std::vector<std::size_t> targets;
    targets.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        // floor((i + 0.5) * n / m) in exact integer arithmetic
        const auto pos = ((2 * i + 1) * n) / (2 * m);
        targets.push_back(dist.lengths()[pos]);
    }
    return targets;
}

Example synth_essay(std::span<const AuxComment> pool, std::size_t target_len, Rng& rng, Emotion label,
                    std::string id) {
    std::vector<std::size_t> drawable;
    for (std::size_t i = 0; i < pool.size(); ++i) {
        if (pool[i].length > 0) drawable.push_back(i);
    }
    if (drawable.empty())
        throw DeficitError("class '" + std::string(to_string(label)) +
                           "' has no non-empty auxiliary comments to build synthetic essays from");
    const auto n = drawable.size();
    std::vector<std::size_t> urn = drawable;
    std::size_t drawn = 0;
    std::string text;
    std::size_t length = 0;
    do {
        if (drawn == n) {
            urn = drawable;
            drawn = 0;
        }
        const auto j = drawn + static_cast<std::size_t>(rng.below(n - drawn));
        std::swap(urn[drawn], urn[j]);
        const auto& c = pool[urn[drawn]];
        ++drawn;
        if (!text.empty()) text.push_back(' ');
        text += c.text;
        length += c.length;
    } while (length < target_len);
    return Example{std::move(id), std::move(text), label, length, Source::synthetic};
}

std::string synthetic_id(Emotion label, std::size_t sequence, std::uint64_t seed) {
    return "rso-" + std::string(to_string(label)) + "-" + std::to_string(sequence) + "-s" + std::to_string(seed);
}

Corpus aous(const Corpus& corpus, std::span<const AuxComment> aux, const SamplerSpec& spec) {
    require_method(spec, Method::aous);
    if (spec.threshold == 0) throw ConfigError("AOUS threshold must be at least 1");
    return top_up_with_longest(corpus, aux, spec.threshold, spec, true);
}

Corpus aos(const Corpus& corpus, std::span<const AuxComment> aux, const SamplerSpec& spec) {
    require_method(spec, Method::aos);
    return top_up_with_longest(corpus, aux, resolve_target(corpus, spec), spec, false);
}

Corpus rso(const Corpus& corpus, std::span<const AuxComment> aux, const SamplerSpec& spec) {
    require_method(spec, Method::rso);
    const auto target = resolve_target(corpus, spec);
    const auto dist = LengthDistribution::of(corpus);
    std::vector<Example> out;
    out.reserve(target * kNumEmotions);
    for (const auto label : kAllEmotions) {
        auto members = corpus.of_class(label);
        const auto deficit = target - members.size();
        std::move(members.begin(), members.end(), std::back_inserter(out));
        if (deficit == 0) continue;
        const auto pool = aux_pool(aux, label);
        auto rng = Rng::for_stream(spec.seed, index_of(label));
        const auto targets = systematic_targets(dist, deficit);
        for (std::size_t i = 0; i < targets.size(); ++i) {
            // an empty original essay still yields a one-comment synthetic essay
            out.push_back(
                synth_essay(pool, std::max<std::size_t>(targets[i], 1), rng, label, synthetic_id(label, i, spec.seed)));
        }
    }
    return Corpus(std::move(out));
}

Corpus augment(const Corpus& corpus, std::span<const AuxComment> aux, const SamplerSpec& spec) {
    switch (spec.method) {
        case Method::aous: return aous(corpus, aux, spec);
        case Method::rso: return rso(corpus, aux, spec);
        case Method::aos: return aos(corpus, aux, spec);
    }
    throw ConfigError("unknown sampler method");
}

}  // namespace emotk
