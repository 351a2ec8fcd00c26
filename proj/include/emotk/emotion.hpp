#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

namespace emotk {

/// The seven target emotions. Enumerator order is the canonical (alphabetical)
/// order used for every matrix axis and report row.
enum class Emotion : std::uint8_t { anger, disgust, fear, joy, neutral, sadness, surprise };

inline constexpr std::size_t kNumEmotions = 7;

inline constexpr std::array<Emotion, kNumEmotions> kAllEmotions = {
    Emotion::anger, Emotion::disgust, Emotion::fear,    Emotion::joy,
    Emotion::neutral, Emotion::sadness, Emotion::surprise};

inline constexpr std::array<std::string_view, kNumEmotions> kEmotionNames = {
    "anger", "disgust", "fear", "joy", "neutral", "sadness", "surprise"};

constexpr std::size_t index_of(Emotion e) noexcept { return static_cast<std::size_t>(e); }

constexpr std::string_view to_string(Emotion e) noexcept { return kEmotionNames[index_of(e)]; }

/// Exact, case-sensitive match against the lowercase label names.
constexpr std::optional<Emotion> parse_emotion(std::string_view name) noexcept {
    for (std::size_t i = 0; i < kNumEmotions; ++i) {
        if (kEmotionNames[i] == name) return kAllEmotions[i];
    }
    return std::nullopt;
}

}  // namespace emotk
