#!/usr/bin/env python3
"""Regenerates include/mcls/unicode_tables.hpp from Python's unicodedata.

Emits compact tables for:
  - punctuation/symbol codepoints (general categories P* and S*) as ranges
  - whitespace codepoints (Z* plus the ASCII control whitespace) as ranges
  - simple lowercase mappings for the Latin blocks (cp <= 0x24F)
  - nonzero canonical combining classes
  - canonical decompositions (at most two codepoints each)
  - primary composites (canonical pairs that recompose under NFC)

Hangul syllables are handled algorithmically in unicode.hpp and are not
emitted here.
"""

import sys
import unicodedata

MAX_CP = 0x110000
SURROGATE_LO, SURROGATE_HI = 0xD800, 0xE000
HANGUL_S_BASE, HANGUL_S_COUNT = 0xAC00, 11172


def category_ranges(predicate):
    ranges = []
    start = None
    for cp in range(MAX_CP):
        if SURROGATE_LO <= cp < SURROGATE_HI:
            inside = False
        else:
            inside = predicate(cp)
        if inside and start is None:
            start = cp
        elif not inside and start is not None:
            ranges.append((start, cp - 1))
            start = None
    if start is not None:
        ranges.append((start, MAX_CP - 1))
    return ranges


def is_punct_or_symbol(cp):
    cat = unicodedata.category(chr(cp))
    return cat[0] in ("P", "S")


def is_whitespace(cp):
    if cp in (0x09, 0x0A, 0x0B, 0x0C, 0x0D, 0x85):
        return True
    return unicodedata.category(chr(cp))[0] == "Z"


def lowercase_entries():
    entries = []
    for cp in range(0x250):
        ch = chr(cp)
        low = ch.lower()
        if low == ch:
            continue
        if len(low) == 1:
            entries.append((cp, ord(low[0])))
        elif all(unicodedata.combining(c) for c in low[1:]):
            # e.g. U+0130 whose full lowercase adds a combining dot;
            # keep the base letter as the simple mapping
            entries.append((cp, ord(low[0])))
    return entries


def ccc_entries():
    entries = []
    for cp in range(MAX_CP):
        if SURROGATE_LO <= cp < SURROGATE_HI:
            continue
        ccc = unicodedata.combining(chr(cp))
        if ccc:
            entries.append((cp, ccc))
    return entries


def decomp_entries():
    entries = []
    for cp in range(MAX_CP):
        if SURROGATE_LO <= cp < SURROGATE_HI:
            continue
        if HANGUL_S_BASE <= cp < HANGUL_S_BASE + HANGUL_S_COUNT:
            continue
        d = unicodedata.decomposition(chr(cp))
        if not d or d.startswith("<"):
            continue  # none, or compatibility-only
        parts = [int(p, 16) for p in d.split()]
        assert 1 <= len(parts) <= 2, hex(cp)
        a = parts[0]
        b = parts[1] if len(parts) == 2 else 0
        entries.append((cp, a, b))
    return entries


def comp_entries(decomps):
    entries = []
    for cp, a, b in decomps:
        if b == 0:
            continue
        if unicodedata.normalize("NFC", chr(a) + chr(b)) == chr(cp):
            entries.append((a, b, cp))
    entries.sort()
    return entries


def fmt_rows(rows, per_line, fmt):
    out = []
    for i in range(0, len(rows), per_line):
        out.append("    " + " ".join(fmt(r) for r in rows[i : i + per_line]))
    return "\n".join(out)


def main(path):
    ps = category_ranges(is_punct_or_symbol)
    ws = category_ranges(is_whitespace)
    lower = lowercase_entries()
    ccc = ccc_entries()
    dec = decomp_entries()
    comp = comp_entries(dec)

    with open(path, "w", encoding="utf-8") as f:
        f.write(
            "// Generated by tools/gen_unicode_tables.py (Unicode %s). Do not edit.\n"
            "#pragma once\n\n"
            "#include <cstdint>\n\n"
            "namespace mcls::uni {\n\n"
            "struct Range { char32_t lo, hi; };\n"
            "struct CaseMap { char32_t from, to; };\n"
            "struct CccEntry { char32_t cp; std::uint8_t ccc; };\n"
            "struct DecompEntry { char32_t cp, a, b; };  // b == 0: singleton\n"
            "struct CompEntry { char32_t a, b, composed; };\n\n"
            % unicodedata.unidata_version
        )
        f.write("inline constexpr Range kPunctSymbolRanges[] = {\n")
        f.write(fmt_rows(ps, 4, lambda r: "{0x%X,0x%X}," % r))
        f.write("\n};\n\n")
        f.write("inline constexpr Range kWhitespaceRanges[] = {\n")
        f.write(fmt_rows(ws, 4, lambda r: "{0x%X,0x%X}," % r))
        f.write("\n};\n\n")
        f.write("inline constexpr CaseMap kLatinLower[] = {\n")
        f.write(fmt_rows(lower, 6, lambda r: "{0x%X,0x%X}," % r))
        f.write("\n};\n\n")
        f.write("inline constexpr CccEntry kCombiningClass[] = {\n")
        f.write(fmt_rows(ccc, 6, lambda r: "{0x%X,%d}," % r))
        f.write("\n};\n\n")
        f.write("inline constexpr DecompEntry kCanonicalDecomp[] = {\n")
        f.write(fmt_rows(dec, 4, lambda r: "{0x%X,0x%X,0x%X}," % r))
        f.write("\n};\n\n")
        f.write("inline constexpr CompEntry kCanonicalComp[] = {\n")
        f.write(fmt_rows(comp, 4, lambda r: "{0x%X,0x%X,0x%X}," % r))
        f.write("\n};\n\n")
        f.write("}  // namespace mcls::uni\n")

    print(
        "wrote %s: %d P/S ranges, %d ws ranges, %d case, %d ccc, %d decomp, %d comp"
        % (path, len(ps), len(ws), len(lower), len(ccc), len(dec), len(comp))
    )


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "include/mcls/unicode_tables.hpp")
