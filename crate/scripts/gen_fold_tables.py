#!/usr/bin/env python3
"""Regenerate the machine-derived fold tables under crates/core/resources/charset.

Writes:
  latin_letters.tsv        decorated / enclosed / accented Latin letters -> ASCII
  arabic_presentation.tsv  Arabic presentation forms -> canonical Persian letters
  digits.tsv               digit variants -> Persian digits

Hand-curated tables (persian_letters.tsv, ligatures.tsv, punctuation.tsv,
entities.tsv, emoji_ranges.txt) are not touched.
"""

import pathlib
import unicodedata

OUT = pathlib.Path(__file__).resolve().parent.parent / "crates/core/resources/charset"

PERSIAN_DIGITS = "۰۱۲۳۴۵۶۷۸۹"

# Arabic letter forms folded to their Persian counterparts. Must agree with
# persian_letters.tsv.
PERSIAN_FOLD = {
    "ي": "ی",  # ARABIC LETTER YEH
    "ى": "ی",  # ALEF MAKSURA
    "ے": "ی",  # YEH BARREE
    "ۓ": "ی",  # YEH BARREE WITH HAMZA ABOVE
    "ۍ": "ی",  # YEH WITH TAIL
    "ێ": "ی",  # YEH WITH SMALL V
    "ې": "ی",  # E
    "ك": "ک",  # ARABIC LETTER KAF
    "ڪ": "ک",  # SWASH KAF
    "ھ": "ه",  # HEH DOACHASHMEE
    "ہ": "ه",  # HEH GOAL
    "ە": "ه",  # AE
    "ـ": "",        # TATWEEL
}


def header(title):
    return [
        f"# {title}",
        "# Generated by scripts/gen_fold_tables.py; edit the script, not this file.",
        "# surface<TAB>replacement",
    ]


def hexname(ch):
    return " ".join(f"U+{ord(c):04X}" for c in ch)


def latin_letters():
    rows = []
    seen = set()

    def add(ch, rep):
        if ch in seen or ch == rep:
            return
        seen.add(ch)
        rows.append((ch, rep))

    for cp in range(0xA0, 0x1FFFF):
        ch = chr(cp)
        cat = unicodedata.category(ch)
        if not (cat.startswith("L") or cat == "So"):
            continue
        if 0xFB00 <= cp <= 0xFB06:
            rep = unicodedata.normalize("NFKC", ch)
            if rep.isascii() and rep.isalpha():
                add(ch, rep)
            continue
        decomp = unicodedata.normalize("NFKD", ch)
        base = "".join(c for c in decomp if unicodedata.category(c) != "Mn")
        if len(base) == 1 and base.isascii() and base.isalpha():
            add(ch, base)
    # Enclosed forms without a compatibility decomposition.
    for i in range(26):
        up, low = chr(ord("A") + i), chr(ord("a") + i)
        add(chr(0x249C + i), low)   # PARENTHESIZED LATIN SMALL
        add(chr(0x1F110 + i), up)   # PARENTHESIZED LATIN CAPITAL
        add(chr(0x1F150 + i), up)   # NEGATIVE CIRCLED LATIN CAPITAL
        add(chr(0x1F170 + i), up)   # NEGATIVE SQUARED LATIN CAPITAL
    rows.sort(key=lambda r: ord(r[0]))
    return rows


def arabic_presentation():
    rows = []
    ranges = [(0xFB50, 0xFDEF), (0xFE70, 0xFEFF)]
    for lo, hi in ranges:
        for cp in range(lo, hi + 1):
            ch = chr(cp)
            if unicodedata.category(ch) != "Lo":
                continue
            nf = unicodedata.normalize("NFKC", ch)
            if nf == ch or not all(unicodedata.category(c) == "Lo" for c in nf):
                continue
            folded = "".join(PERSIAN_FOLD.get(c, c) for c in nf)
            if folded:
                rows.append((ch, folded))
    return rows


def digits():
    rows = []
    seen = set()

    def add(ch, ascii_rep):
        if ch in seen:
            return
        seen.add(ch)
        rep = "".join(PERSIAN_DIGITS[int(c)] if c.isdigit() else c for c in ascii_rep)
        rows.append((ch, rep))

    for d in range(10):
        add(str(d), str(d))
        add(chr(0x0660 + d), str(d))  # ARABIC-INDIC
    for cp in range(0xA0, 0x1FFFF):
        ch = chr(cp)
        cat = unicodedata.category(ch)
        if cat not in ("Nd", "No"):
            continue
        name = unicodedata.name(ch, "")
        if "SUPERSCRIPT" in name or "SUBSCRIPT" in name or "FRACTION" in name:
            continue
        if 0x06F0 <= cp <= 0x06F9:
            continue
        nf = unicodedata.normalize("NFKC", ch)
        if nf == ch or not any(c.isdigit() for c in nf):
            continue
        if not all(c.isascii() and (c.isdigit() or c in "().,") for c in nf):
            continue
        add(ch, nf)
    # Enclosed digits without a compatibility decomposition.
    for i in range(10):
        add(chr(0x2776 + i), str(i + 1))   # DINGBAT NEGATIVE CIRCLED
        add(chr(0x2780 + i), str(i + 1))   # DINGBAT CIRCLED SANS-SERIF
        add(chr(0x278A + i), str(i + 1))   # DINGBAT NEGATIVE CIRCLED SANS-SERIF
        add(chr(0x24F5 + i), str(i + 1))   # DOUBLE CIRCLED
        add(chr(0x24EB + i), str(i + 11))  # NEGATIVE CIRCLED 11..20
    add("⓿", "0")       # NEGATIVE CIRCLED DIGIT ZERO
    add("\U0001F10B", "0")   # DINGBAT CIRCLED SANS-SERIF DIGIT ZERO
    add("\U0001F10C", "0")   # DINGBAT NEGATIVE CIRCLED SANS-SERIF DIGIT ZERO
    rows.sort(key=lambda r: ord(r[0]))
    return rows


def write(name, title, rows):
    lines = header(title)
    for surface, rep in rows:
        lines.append(f"{surface}\t{rep}")
    (OUT / name).write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{name}: {len(rows)} entries")


if __name__ == "__main__":
    write("latin_letters.tsv", "Latin letter variants folded to plain ASCII letters", latin_letters())
    write("arabic_presentation.tsv", "Arabic presentation forms folded to canonical Persian letters", arabic_presentation())
    write("digits.tsv", "Digit variants folded to Persian digits", digits())
