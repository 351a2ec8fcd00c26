#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "emotk/error.hpp"
#include "emotk/samplers.hpp"
#include "emotk/text.hpp"
#include "fixtures.hpp"

using namespace emotk;

namespace {

AuxComment comment(const std::string& id, std::size_t length, Emotion label) {
    AuxComment c;
    c.id = id;
    for (std::size_t i = 0; i < length; ++i) c.text += std::string(i ? " " : "") + id + "t";
    c.length = token_length(c.text);
    c.mapped = label;
    c.source_labels = {std::string(to_string(label))};
    return c;
}

Example essay(const std::string& id, std::size_t length, Emotion label) {
    std::string text;
    for (std::size_t i = 0; i < length; ++i) text += std::string(i ? " " : "") + "e";
    return make_example(id, text, label, Source::original);
}

std::vector<std::size_t> lengths_of(const std::vector<AuxComment>& cs) {
    std::vector<std::size_t> out;
    for (const auto& c : cs) out.push_back(c.length);
    return out;
}

// Every class other than anger/disgust sits at `filler` originals.
std::vector<Example> filler_classes(std::size_t filler) {
    std::vector<Example> out;
    for (const auto e : kAllEmotions) {
        if (e == Emotion::anger || e == Emotion::disgust) continue;
        for (std::size_t i = 0; i < filler; ++i)
            out.push_back(essay(std::string(to_string(e)) + std::to_string(i), 10, e));
    }
    return out;
}

}  // namespace

TEST_CASE("longest_k orders by length then id") {
    const std::vector<AuxComment> pool = {comment("c1", 5, Emotion::joy), comment("c2", 9, Emotion::joy),
                                          comment("c3", 7, Emotion::joy)};
    CHECK(lengths_of(longest_k(pool, 2, Emotion::joy)) == std::vector<std::size_t>{9, 7});
    CHECK(longest_k(pool, 0, Emotion::joy).empty());

    const std::vector<AuxComment> ties = {comment("c2", 7, Emotion::joy), comment("c1", 7, Emotion::joy),
                                          comment("c0", 5, Emotion::joy)};
    const auto one = longest_k(ties, 1, Emotion::joy);
    REQUIRE(one.size() == 1);
    CHECK(one[0].id == "c1");

    CHECK_THROWS_WITH_AS(longest_k(pool, 5, Emotion::joy), doctest::Contains("short by 2"), DeficitError);
    CHECK_THROWS_WITH_AS(longest_k(pool, 5, Emotion::joy), doctest::Contains("joy"), DeficitError);
}

TEST_CASE("undersample") {
    const std::vector<Example> three = {essay("x0", 1, Emotion::joy), essay("x1", 2, Emotion::joy),
                                        essay("x2", 3, Emotion::joy)};
    SUBCASE("k == size is identity") {
        Rng rng(1);
        CHECK(undersample(three, 3, rng) == three);
    }
    SUBCASE("seeded trace") {
        // prng_oracle.py: Rng(42) -> {0, 1}; stream(7, 0) -> {1, 2}; stream(8, 0) -> {0, 2}
        Rng a(42);
        CHECK(undersample(three, 2, a) == std::vector<Example>{three[0], three[1]});
        auto b = Rng::for_stream(7, 0);
        CHECK(undersample(three, 2, b) == std::vector<Example>{three[1], three[2]});
        auto c = Rng::for_stream(8, 0);
        CHECK(undersample(three, 2, c) == std::vector<Example>{three[0], three[2]});
    }
    SUBCASE("k > size") {
        Rng rng(1);
        CHECK_THROWS_AS(undersample(three, 4, rng), ConfigError);
    }
}

TEST_CASE("undersample is uniform over k-subsets" * doctest::description("Monte-Carlo")) {
    std::vector<Example> five;
    for (int i = 0; i < 5; ++i) five.push_back(essay("x" + std::to_string(i), 1, Emotion::joy));
    std::map<std::pair<std::string, std::string>, int> freq;
    const int trials = 10000;
    for (int seed = 0; seed < trials; ++seed) {
        Rng rng(static_cast<std::uint64_t>(seed));
        const auto pick = undersample(five, 2, rng);
        REQUIRE(pick.size() == 2);
        CHECK(pick[0].id < pick[1].id);
        ++freq[{pick[0].id, pick[1].id}];
    }
    CHECK(freq.size() == 10);
    for (const auto& [subset, n] : freq) CHECK(std::abs(n / double(trials) - 0.1) <= 0.02);
}

TEST_CASE("systematic_targets picks evenly spaced order statistics") {
    CHECK(systematic_targets(LengthDistribution({20, 10}), 2) == std::vector<std::size_t>{10, 20});
    CHECK(systematic_targets(LengthDistribution({84}), 5) == std::vector<std::size_t>(5, 84));
    std::vector<std::size_t> hundred(100);
    std::iota(hundred.begin(), hundred.end(), std::size_t{1});
    CHECK(systematic_targets(LengthDistribution(hundred), 4) == std::vector<std::size_t>{13, 38, 63, 88});
    CHECK_THROWS_AS(systematic_targets(LengthDistribution({}), 3), ConfigError);

    // m == n reproduces the distribution exactly
    const LengthDistribution d({3, 1, 4, 1, 5, 9, 2, 6});
    CHECK(systematic_targets(d, 8) == d.lengths());
}

TEST_CASE("synth_essay concatenates random comments until the target length") {
    const std::vector<AuxComment> pool = {comment("p0", 3, Emotion::joy), comment("p1", 4, Emotion::joy),
                                          comment("p2", 5, Emotion::joy), comment("p3", 2, Emotion::joy)};
    SUBCASE("seeded trace draws (3, 4, 5)") {
        // prng_oracle.py: stream(2, 1) draws indices 0, 1, 2
        auto rng = Rng::for_stream(2, 1);
        const auto ex = synth_essay(pool, 10, rng, Emotion::joy, "s");
        CHECK(ex.length == 12);
        CHECK(ex.text == pool[0].text + " " + pool[1].text + " " + pool[2].text);
        CHECK(ex.source == Source::synthetic);
        CHECK(ex.label == Emotion::joy);
        CHECK(ex.length == token_length(ex.text));
    }
    SUBCASE("urn refills once exhausted") {
        // prng_oracle.py: stream(5, 1), target 30 -> draws 3 0 1 2 | 1 3 2 0 | 0, length 31
        auto rng = Rng::for_stream(5, 1);
        const auto ex = synth_essay(pool, 30, rng, Emotion::joy, "s");
        CHECK(ex.length == 31);
        CHECK(ex.length == token_length(ex.text));
    }
    SUBCASE("target 1 takes exactly one comment") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            Rng rng(seed);
            const auto ex = synth_essay(pool, 1, rng, Emotion::joy, "s");
            CHECK(std::any_of(pool.begin(), pool.end(), [&](const AuxComment& c) { return c.text == ex.text; }));
        }
    }
    SUBCASE("length bounds") {
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            Rng rng(seed);
            const auto target = 1 + seed % 40;
            const auto ex = synth_essay(pool, target, rng, Emotion::joy, "s");
            CHECK(ex.length >= target);
            CHECK(ex.length < target + 5);
        }
    }
    SUBCASE("empty or all-empty pool") {
        Rng rng(1);
        CHECK_THROWS_AS(synth_essay({}, 3, rng, Emotion::joy, "s"), DeficitError);
        AuxComment blank;
        blank.id = "b";
        blank.mapped = Emotion::joy;
        const std::vector<AuxComment> blanks = {blank};
        CHECK_THROWS_AS(synth_essay(blanks, 3, rng, Emotion::joy, "s"), DeficitError);
    }
}

TEST_CASE("aous toy corpus") {
    // anger: 3 originals, disgust: 1 original, everything else at 2; X = 2
    std::vector<Example> ex = {essay("a0", 10, Emotion::anger), essay("a1", 11, Emotion::anger),
                               essay("a2", 12, Emotion::anger), essay("b0", 10, Emotion::disgust)};
    for (auto& f : filler_classes(2)) ex.push_back(f);
    const Corpus corpus(ex);
    const std::vector<AuxComment> aux = {comment("g5", 5, Emotion::disgust), comment("g9", 9, Emotion::disgust),
                                         comment("g7", 7, Emotion::disgust), comment("h1", 8, Emotion::joy)};
    // prng_oracle.py: stream(7, 0) keeps indices {1, 2}
    const auto out = aous(corpus, aux, SamplerSpec{Method::aous, 2, 7, std::nullopt});
    for (const auto e : kAllEmotions) CHECK(out.count(e) == 2);
    CHECK(out.size() == 14);
    const auto& rows = out.examples();
    CHECK(rows[0].id == "a1");
    CHECK(rows[1].id == "a2");
    CHECK(rows[2].id == "b0");
    CHECK(rows[3].id == "aux-g9");
    CHECK(rows[3].source == Source::aux);
    CHECK(rows[3].length == 9);
    CHECK(rows[3].text == aux[1].text);
    // untouched class is bit-for-bit the originals in order
    CHECK(out.of_class(Emotion::fear) == corpus.of_class(Emotion::fear));

    CHECK(aous(corpus, aux, SamplerSpec{Method::aous, 2, 7, std::nullopt}) == out);
    CHECK_THROWS_AS(aous(corpus, aux, SamplerSpec{Method::aous, 4, 7, std::nullopt}), DeficitError);
    CHECK_THROWS_AS(aous(corpus, aux, SamplerSpec{Method::aous, 0, 7, std::nullopt}), ConfigError);
    CHECK_THROWS_AS(aous(corpus, aux, SamplerSpec{Method::aos, 2, 7, std::nullopt}), ConfigError);
}

TEST_CASE("aos toy corpus") {
    std::vector<Example> ex = {essay("a0", 10, Emotion::anger), essay("a1", 11, Emotion::anger),
                               essay("a2", 12, Emotion::anger), essay("b0", 10, Emotion::disgust)};
    for (auto& f : filler_classes(3)) ex.push_back(f);
    const Corpus corpus(ex);
    const std::vector<AuxComment> aux = {comment("g5", 5, Emotion::disgust), comment("g9", 9, Emotion::disgust),
                                         comment("g7", 7, Emotion::disgust)};
    const auto out = aos(corpus, aux, SamplerSpec{Method::aos, 400, 1, std::nullopt});
    for (const auto e : kAllEmotions) CHECK(out.count(e) == 3);
    const auto b = out.of_class(Emotion::disgust);
    REQUIRE(b.size() == 3);
    CHECK(b[0].id == "b0");
    CHECK(b[1].length == 9);
    CHECK(b[2].length == 7);
    CHECK(out.of_class(Emotion::anger) == corpus.of_class(Emotion::anger));

    SUBCASE("balanced input is returned unchanged") {
        const Corpus balanced(filler_classes(2));
        std::vector<Example> all = balanced.examples();
        all.push_back(essay("a0", 1, Emotion::anger));
        all.push_back(essay("a1", 1, Emotion::anger));
        all.push_back(essay("b0", 1, Emotion::disgust));
        all.push_back(essay("b1", 1, Emotion::disgust));
        std::stable_sort(all.begin(), all.end(), [](const Example& x, const Example& y) { return x.label < y.label; });
        const Corpus canonical(all);
        CHECK(aos(canonical, {}, SamplerSpec{Method::aos, 400, 1, std::nullopt}) == canonical);
    }
    SUBCASE("explicit target") {
        const std::vector<AuxComment> none;
        CHECK_THROWS_AS(aos(corpus, aux, SamplerSpec{Method::aos, 400, 1, 2}), ConfigError);
        CHECK_THROWS_AS(aos(corpus, aux, SamplerSpec{Method::aos, 400, 1, 5}), DeficitError);
    }
}

TEST_CASE("rso toy corpus") {
    // originals: anger lengths 10 and 20, disgust length 10; others at 2 with length 10.
    std::vector<Example> ex = {essay("a0", 10, Emotion::anger), essay("a1", 20, Emotion::anger),
                               essay("b0", 10, Emotion::disgust)};
    for (auto& f : filler_classes(2)) ex.push_back(f);
    const Corpus corpus(ex);
    const std::vector<AuxComment> aux = {comment("p0", 3, Emotion::disgust), comment("p1", 4, Emotion::disgust),
                                         comment("p2", 5, Emotion::disgust), comment("p3", 2, Emotion::disgust)};
    // disgust is class index 1; prng_oracle.py: stream(2, 1) draws (3, 4, 5)
    const auto out = rso(corpus, aux, SamplerSpec{Method::rso, 400, 2, std::nullopt});
    for (const auto e : kAllEmotions) CHECK(out.count(e) == 2);
    const auto b = out.of_class(Emotion::disgust);
    REQUIRE(b.size() == 2);
    CHECK(b[0].id == "b0");
    CHECK(b[1].id == synthetic_id(Emotion::disgust, 0, 2));
    CHECK(b[1].source == Source::synthetic);
    CHECK(b[1].length == 12);
    // the largest class receives nothing
    CHECK(out.of_class(Emotion::anger) == corpus.of_class(Emotion::anger));

    CHECK_THROWS_AS(rso(corpus, {}, SamplerSpec{Method::rso, 400, 2, std::nullopt}), DeficitError);
}

TEST_CASE("sampler properties on the training-shaped fixture" * doctest::description("property")) {
    fixtures::TempDir dir("samplers");
    fixtures::write_wassa(dir / "train.tsv");
    fixtures::write_goemotions(dir / "aux.tsv");
    const auto mapping = load_mapping(std::string(EMOTK_DATA_DIR) + "/ekman_mapping.txt");
    const auto corpus = load_wassa(dir / "train.tsv");
    const auto aux = load_goemotions(dir / "aux.tsv", mapping);
    const auto largest = *std::max_element(corpus.histogram().begin(), corpus.histogram().end());

    std::set<std::string> original_ids;
    for (const auto& e : corpus.examples()) original_ids.insert(e.id);
    std::map<std::string, const AuxComment*> aux_by_id;
    for (const auto& c : aux) aux_by_id["aux-" + c.id] = &c;

    for (const auto method : {Method::aous, Method::aos, Method::rso}) {
        CAPTURE(to_string(method));
        const SamplerSpec spec{method, 400, 3407, std::nullopt};
        const auto out = augment(corpus, aux, spec);
        const auto per_class = method == Method::aous ? std::size_t{400} : largest;
        for (const auto e : kAllEmotions) CHECK(out.count(e) == per_class);
        CHECK(out.size() == per_class * kNumEmotions);
        CHECK(out == augment(corpus, aux, spec));

        std::size_t originals = 0;
        for (const auto& ex : out.examples()) {
            CHECK(ex.length == token_length(ex.text));
            if (ex.source == Source::original) {
                ++originals;
                CHECK(original_ids.count(ex.id) == 1);
            } else if (ex.source == Source::aux) {
                const auto it = aux_by_id.find(ex.id);
                REQUIRE(it != aux_by_id.end());
                CHECK(it->second->text == ex.text);
                CHECK(it->second->mapped == ex.label);
            }
        }
        if (method != Method::aous) CHECK(originals == corpus.size());
    }

    SUBCASE("RSO synthetic lengths track the original distribution") {
        const auto out = rso(corpus, aux, SamplerSpec{Method::rso, 400, 3407, std::nullopt});
        double synth = 0, orig = 0;
        std::size_t ns = 0;
        for (const auto& ex : out.examples()) {
            if (ex.source == Source::synthetic) {
                synth += static_cast<double>(ex.length);
                ++ns;
            }
        }
        for (const auto& ex : corpus.examples()) orig += static_cast<double>(ex.length);
        orig /= static_cast<double>(corpus.size());
        synth /= static_cast<double>(ns);
        CHECK(std::abs(synth - orig) / orig < 0.2);
    }
}
