#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace emotk {

/// Cleans raw text. Applied in order:
///   1. line breaks (LF, CR, VT, FF, NEL, LS, PS) become a single space
///   2. punctuation is deleted (Unicode P* categories plus the ASCII symbols
///      !"#$%&'()*+,-./:;<=>?@[\]^_`{|}~)
///   3. decimal digits (Unicode Nd) are deleted
///   4. runs of Unicode White_Space collapse to one ASCII space
///   5. leading/trailing whitespace is trimmed
/// The result is a fixed point: preprocess(preprocess(s)) == preprocess(s).
/// Bytes that are not valid UTF-8 are passed through unchanged.
std::string preprocess(std::string_view raw);

/// Number of maximal runs of non-whitespace code points.
std::size_t token_length(std::string_view text);

bool is_punctuation(char32_t cp) noexcept;
bool is_decimal_digit(char32_t cp) noexcept;
bool is_whitespace(char32_t cp) noexcept;

}  // namespace emotk
