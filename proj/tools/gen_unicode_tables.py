#!/usr/bin/env python3
"""Regenerates src/unicode_tables.inc from Python's unicodedata.

Punctuation = general categories Pc Pd Ps Pe Pi Pf Po, plus the ASCII symbol
characters !"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~.
Digits = general category Nd.
"""
import sys
import unicodedata

ASCII_SYMBOLS = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~"


def ranges(pred):
    out = []
    start = None
    for cp in range(0x110000):
        hit = pred(cp)
        if hit and start is None:
            start = cp
        elif not hit and start is not None:
            out.append((start, cp - 1))
            start = None
    if start is not None:
        out.append((start, 0x10FFFF))
    return out


def is_punct(cp):
    return unicodedata.category(chr(cp)).startswith("P") or chr(cp) in ASCII_SYMBOLS


def is_digit(cp):
    return unicodedata.category(chr(cp)) == "Nd"


def emit(name, rs):
    lines = [f"inline constexpr CodepointRange {name}[] = {{"]
    for a, b in rs:
        lines.append(f"    {{0x{a:04X}, 0x{b:04X}}},")
    lines.append("};")
    return "\n".join(lines)


def main():
    print(f"// Generated by tools/gen_unicode_tables.py (Unicode {unicodedata.unidata_version}). Do not edit.")
    print()
    print(emit("kPunctuationRanges", ranges(is_punct)))
    print()
    print(emit("kDecimalDigitRanges", ranges(is_digit)))


if __name__ == "__main__":
    sys.exit(main())
