#pragma once

// Synthetic stand-ins for the WASSA train file and the GoEmotions train file.
// Shapes follow the real releases: 1860 essays with the published class
// skew, essays averaging ~84 tokens, comments averaging ~12 tokens.

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <iterator>
#include <string>
#include <system_error>

#include <unistd.h>

namespace fixtures {

// WASSA 2022 EMO train distribution, canonical order (sums to 1860).
inline constexpr std::array<std::size_t, 7> kWassaTrainCounts = {349, 149, 194, 82, 275, 647, 164};
inline constexpr std::array<const char*, 7> kLabels = {"anger", "disgust", "fear", "joy",
                                                       "neutral", "sadness", "surprise"};

/// Scratch directory removed on destruction.
class TempDir {
public:
    explicit TempDir(const std::string& tag) {
        static std::size_t counter = 0;
        path_ = std::filesystem::temp_directory_path() /
                ("emotk-" + tag + "-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(path_);
        std::filesystem::create_directories(path_);
    }
    ~TempDir() {
        std::error_code ignored;
        std::filesystem::remove_all(path_, ignored);
    }
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
};

inline void write_text(const std::filesystem::path& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    out << contents;
}

inline std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline std::string random_word(std::mt19937_64& gen) {
    static constexpr char kLetters[] = "abcdefghijklmnopqrstuvwxyz";
    const auto len = 2 + gen() % 7;
    std::string w;
    for (std::size_t i = 0; i < len; ++i) w.push_back(kLetters[gen() % 26]);
    return w;
}

inline std::string random_text(std::mt19937_64& gen, std::size_t words) {
    std::string s;
    for (std::size_t i = 0; i < words; ++i) {
        if (i) s += (gen() % 11 == 0) ? "  " : " ";
        s += random_word(gen);
        if (gen() % 9 == 0) s += ",";
        if (gen() % 13 == 0) s += "!";
    }
    s += ".";
    return s;
}

/// Header: message_id, essay, emotion, gender. Rows interleave classes.
inline void write_wassa(const std::filesystem::path& path, std::uint64_t seed = 2022,
                        std::array<std::size_t, 7> counts = kWassaTrainCounts) {
    std::mt19937_64 gen(seed);
    std::ofstream out(path, std::ios::binary);
    out << "message_id\tessay\temotion\tgender\n";
    std::array<std::size_t, 7> left = counts;
    std::size_t total = 0;
    for (auto c : counts) total += c;
    for (std::size_t row = 0; row < total; ++row) {
        std::size_t c = gen() % 7;
        while (left[c] == 0) c = (c + 1) % 7;
        --left[c];
        const auto words = 40 + gen() % 89;  // mean 84
        out << "R_" << row << '\t' << random_text(gen, words) << '\t' << kLabels[c] << '\t' << (1 + gen() % 2)
            << '\n';
    }
}

/// Headerless: text, comma-separated label ids, comment id. `per_label`
/// single-label comments for each of the 28 ids, plus multi-label rows.
inline void write_goemotions(const std::filesystem::path& path, std::size_t per_label = 700,
                             std::uint64_t seed = 27) {
    std::mt19937_64 gen(seed);
    std::ofstream out(path, std::ios::binary);
    std::size_t id = 0;
    for (std::size_t round = 0; round < per_label; ++round) {
        for (std::size_t label = 0; label < 28; ++label) {
            const auto words = 1 + gen() % 23;  // mean 12
            out << random_text(gen, words) << '\t' << label << "\tc" << id++ << '\n';
        }
        if (round % 4 == 0) {
            // anger + joy: ambiguous, dropped
            out << random_text(gen, 1 + gen() % 23) << "\t2,17\tc" << id++ << '\n';
            // anger + annoyance: both anger, kept
            out << random_text(gen, 1 + gen() % 23) << "\t2,3\tc" << id++ << '\n';
        }
    }
}

}  // namespace fixtures
