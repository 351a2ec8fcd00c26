#include "emotk/text.hpp"

#include <algorithm>
#include <iterator>

namespace emotk {
namespace {

struct CodepointRange {
    char32_t first;
    char32_t last;
};

#include "unicode_tables.inc"

template <std::size_t N>
bool in_ranges(const CodepointRange (&table)[N], char32_t cp) noexcept {
    const auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                                     [](char32_t v, const CodepointRange& r) { return v < r.first; });
    if (it == std::begin(table)) return false;
    return cp <= std::prev(it)->last;
}

bool is_line_break(char32_t cp) noexcept {
    return cp == U'\n' || cp == U'\r' || cp == U'\v' || cp == U'\f' || cp == 0x85 || cp == 0x2028 ||
           cp == 0x2029;
}

// One decoded unit: either a code point with its encoded bytes, or a stray byte.
struct Unit {
    char32_t cp;
    std::string_view bytes;
    bool valid;
};

class Utf8Reader {
public:
    explicit Utf8Reader(std::string_view s) : s_(s) {}

    bool done() const noexcept { return pos_ >= s_.size(); }

    Unit next() noexcept {
        const auto lead = static_cast<unsigned char>(s_[pos_]);
        std::size_t len = 0;
        char32_t cp = 0;
        if (lead < 0x80) {
            len = 1;
            cp = lead;
        } else if ((lead & 0xE0) == 0xC0) {
            len = 2;
            cp = lead & 0x1F;
        } else if ((lead & 0xF0) == 0xE0) {
            len = 3;
            cp = lead & 0x0F;
        } else if ((lead & 0xF8) == 0xF0) {
            len = 4;
            cp = lead & 0x07;
        }
        bool ok = len != 0 && pos_ + len <= s_.size();
        for (std::size_t i = 1; ok && i < len; ++i) {
            const auto c = static_cast<unsigned char>(s_[pos_ + i]);
            if ((c & 0xC0) != 0x80) {
                ok = false;
            } else {
                cp = (cp << 6) | (c & 0x3F);
            }
        }
        // reject overlong forms, surrogates and out-of-range values
        if (ok) {
            static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
            ok = cp >= kMin[len] && cp <= 0x10FFFF && !(cp >= 0xD800 && cp <= 0xDFFF);
        }
        if (!ok) {
            Unit u{0xFFFD, s_.substr(pos_, 1), false};
            ++pos_;
            return u;
        }
        Unit u{cp, s_.substr(pos_, len), true};
        pos_ += len;
        return u;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

bool is_punctuation(char32_t cp) noexcept { return in_ranges(kPunctuationRanges, cp); }

bool is_decimal_digit(char32_t cp) noexcept { return in_ranges(kDecimalDigitRanges, cp); }

bool is_whitespace(char32_t cp) noexcept {
    return (cp >= 0x09 && cp <= 0x0D) || cp == 0x20 || cp == 0x85 || cp == 0xA0 || cp == 0x1680 ||
           (cp >= 0x2000 && cp <= 0x200A) || cp == 0x2028 || cp == 0x2029 || cp == 0x202F ||
           cp == 0x205F || cp == 0x3000;
}

std::string preprocess(std::string_view raw) {
    // The five steps fuse into one pass: line breaks are already whitespace,
    // and deletions cannot create new whitespace.
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    Utf8Reader reader(raw);
    while (!reader.done()) {
        const Unit u = reader.next();
        if (u.valid) {
            if (is_line_break(u.cp) || is_whitespace(u.cp)) {
                pending_space = true;
                continue;
            }
            if (is_punctuation(u.cp) || is_decimal_digit(u.cp)) continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.append(u.bytes);
    }
    return out;
}

std::size_t token_length(std::string_view text) {
    std::size_t count = 0;
    bool in_token = false;
    Utf8Reader reader(text);
    while (!reader.done()) {
        const Unit u = reader.next();
        const bool ws = u.valid && is_whitespace(u.cp);
        if (!ws && !in_token) ++count;
        in_token = !ws;
    }
    return count;
}

}  // namespace emotk
