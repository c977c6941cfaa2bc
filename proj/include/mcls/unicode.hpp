#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>

#include "mcls/errors.hpp"
#include "mcls/unicode_tables.hpp"

namespace mcls::uni {

inline constexpr char32_t kReplacement = 0xFFFD;

// --- UTF-8 codec ------------------------------------------------------------

// Decodes one scalar value starting at s[i]. Advances i past the sequence.
// Returns kReplacement (and advances by one byte) on malformed input.
inline char32_t decode_one(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    std::size_t len;
    char32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        len = 2;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        len = 3;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        len = 4;
        cp = b0 & 0x07;
    } else {
        ++i;
        return kReplacement;
    }
    if (i + len > s.size()) {
        ++i;
        return kReplacement;
    }
    for (std::size_t k = 1; k < len; ++k) {
        unsigned char b = byte(i + k);
        if ((b & 0xC0) != 0x80) {
            ++i;
            return kReplacement;
        }
        cp = (cp << 6) | (b & 0x3F);
    }
    // Reject overlong forms, surrogates, and out-of-range values.
    static constexpr char32_t kMin[5] = {0, 0, 0x80, 0x800, 0x10000};
    if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp < 0xE000)) {
        ++i;
        return kReplacement;
    }
    i += len;
    return cp;
}

inline std::u32string decode_utf8(std::string_view s) {
    std::u32string out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) out.push_back(decode_one(s, i));
    return out;
}

inline bool valid_utf8(std::string_view s) {
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t before = i;
        char32_t cp = decode_one(s, i);
        // Error paths consume exactly one byte; a genuine U+FFFD consumes three.
        if (cp == kReplacement && i != before + 3) return false;
    }
    return true;
}

inline void append_utf8(std::string& out, char32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

inline std::string encode_utf8(std::u32string_view s) {
    std::string out;
    out.reserve(s.size() * 3);
    for (char32_t cp : s) append_utf8(out, cp);
    return out;
}

// --- table lookups ----------------------------------------------------------

namespace detail {

template <std::size_t N>
inline bool in_ranges(const Range (&table)[N], char32_t cp) {
    auto it = std::upper_bound(std::begin(table), std::end(table), cp,
                               [](char32_t v, const Range& r) { return v < r.lo; });
    return it != std::begin(table) && cp <= std::prev(it)->hi;
}

}  // namespace detail

inline bool is_punct_or_symbol(char32_t cp) { return detail::in_ranges(kPunctSymbolRanges, cp); }

inline bool is_space(char32_t cp) { return detail::in_ranges(kWhitespaceRanges, cp); }

// Simple lowercase for the Latin blocks; identity elsewhere.
inline char32_t lower_latin(char32_t cp) {
    auto it = std::lower_bound(std::begin(kLatinLower), std::end(kLatinLower), cp,
                               [](const CaseMap& m, char32_t v) { return m.from < v; });
    if (it != std::end(kLatinLower) && it->from == cp) return it->to;
    return cp;
}

inline std::uint8_t combining_class(char32_t cp) {
    auto it = std::lower_bound(std::begin(kCombiningClass), std::end(kCombiningClass), cp,
                               [](const CccEntry& e, char32_t v) { return e.cp < v; });
    if (it != std::end(kCombiningClass) && it->cp == cp) return it->ccc;
    return 0;
}

// --- NFC normalization ------------------------------------------------------

namespace detail {

constexpr char32_t kHangulSBase = 0xAC00, kHangulLBase = 0x1100, kHangulVBase = 0x1161,
                   kHangulTBase = 0x11A7;
constexpr char32_t kHangulLCount = 19, kHangulVCount = 21, kHangulTCount = 28;
constexpr char32_t kHangulNCount = kHangulVCount * kHangulTCount;  // 588
constexpr char32_t kHangulSCount = kHangulLCount * kHangulNCount;  // 11172

inline const DecompEntry* find_decomp(char32_t cp) {
    auto it = std::lower_bound(std::begin(kCanonicalDecomp), std::end(kCanonicalDecomp), cp,
                               [](const DecompEntry& e, char32_t v) { return e.cp < v; });
    if (it != std::end(kCanonicalDecomp) && it->cp == cp) return &*it;
    return nullptr;
}

inline void decompose_into(char32_t cp, std::u32string& out) {
    if (cp >= kHangulSBase && cp < kHangulSBase + kHangulSCount) {
        char32_t s = cp - kHangulSBase;
        out.push_back(kHangulLBase + s / kHangulNCount);
        out.push_back(kHangulVBase + (s % kHangulNCount) / kHangulTCount);
        char32_t t = s % kHangulTCount;
        if (t != 0) out.push_back(kHangulTBase + t);
        return;
    }
    if (const DecompEntry* e = find_decomp(cp)) {
        decompose_into(e->a, out);
        if (e->b != 0) decompose_into(e->b, out);
        return;
    }
    out.push_back(cp);
}

// Stable sort of combining marks by canonical combining class.
inline void canonical_order(std::u32string& s) {
    for (std::size_t i = 1; i < s.size(); ++i) {
        std::uint8_t ccc = combining_class(s[i]);
        if (ccc == 0) continue;
        std::size_t j = i;
        while (j > 0) {
            std::uint8_t prev = combining_class(s[j - 1]);
            if (prev == 0 || prev <= ccc) break;
            std::swap(s[j - 1], s[j]);
            --j;
        }
    }
}

// Primary composite of (a, b), or 0 if the pair does not compose.
inline char32_t compose_pair(char32_t a, char32_t b) {
    if (a >= kHangulLBase && a < kHangulLBase + kHangulLCount && b >= kHangulVBase &&
        b < kHangulVBase + kHangulVCount) {
        return kHangulSBase + ((a - kHangulLBase) * kHangulVCount + (b - kHangulVBase)) * kHangulTCount;
    }
    if (a >= kHangulSBase && a < kHangulSBase + kHangulSCount &&
        (a - kHangulSBase) % kHangulTCount == 0 && b > kHangulTBase &&
        b < kHangulTBase + kHangulTCount) {
        return a + (b - kHangulTBase);
    }
    auto it = std::lower_bound(std::begin(kCanonicalComp), std::end(kCanonicalComp),
                               std::pair<char32_t, char32_t>(a, b),
                               [](const CompEntry& e, const std::pair<char32_t, char32_t>& v) {
                                   return e.a != v.first ? e.a < v.first : e.b < v.second;
                               });
    if (it != std::end(kCanonicalComp) && it->a == a && it->b == b) return it->composed;
    return 0;
}

inline void compose(std::u32string& s) {
    if (s.empty()) return;
    std::size_t last_starter = std::u32string::npos;
    std::uint8_t last_ccc = 255;  // blocks composition until a starter is seen
    std::u32string out;
    out.reserve(s.size());
    for (char32_t cp : s) {
        std::uint8_t ccc = combining_class(cp);
        if (last_starter != std::u32string::npos && (last_ccc == 0 || last_ccc < ccc)) {
            if (char32_t comp = compose_pair(out[last_starter], cp)) {
                out[last_starter] = comp;
                continue;  // ccc state unchanged; the mark was absorbed
            }
        }
        out.push_back(cp);
        if (ccc == 0) {
            last_starter = out.size() - 1;
            last_ccc = 0;
        } else {
            last_ccc = ccc;
        }
    }
    s.swap(out);
}

}  // namespace detail

inline std::u32string nfc(std::u32string_view in) {
    std::u32string d;
    d.reserve(in.size());
    for (char32_t cp : in) detail::decompose_into(cp, d);
    detail::canonical_order(d);
    detail::compose(d);
    return d;
}

inline std::string nfc_utf8(std::string_view in) { return encode_utf8(nfc(decode_utf8(in))); }

}  // namespace mcls::uni
