#!/usr/bin/env python3
"""Builds tests/data/formula_oracle.tsv.

Reads one curated text per line plus the counts emitted for them by
`readctl analyze --format json`, and evaluates the five readability formulas
with exact rational arithmetic. Only the counts come from readctl; the
expected scores are computed here from the formulas alone.

    tail -n +2 tests/data/formula_oracle.tsv | cut -f14 > texts.txt
    readctl analyze --format json < texts.txt > stats.jsonl
    build_formula_oracle.py stats.jsonl texts.txt > formula_oracle.tsv
"""

import json
import sys
from fractions import Fraction as F

COUNTS = ["words", "sentences", "syllables", "letters", "long_words",
          "complex_words", "difficult_words"]


def scores(c):
    w, s = F(c["words"]), F(c["sentences"])
    fre = F("206.835") - F("1.015") * w / s - F("84.6") * c["syllables"] / w
    gfi_paper = F("0.4") * (w / s + 100 * F(c["long_words"]) / s)
    gfi_standard = F("0.4") * (w / s + 100 * F(c["complex_words"]) / w)
    ari = F("4.71") * c["letters"] / w + F("0.5") * w / s - F("21.43")
    dcr = F("0.1579") * 100 * F(c["difficult_words"]) / w + F("0.0496") * w / s
    letters_per_100 = 100 * F(c["letters"]) / w
    sentences_per_100 = 100 * s / w
    cli = F("0.0588") * letters_per_100 - F("0.296") * sentences_per_100 - F("15.8")
    return [fre, gfi_paper, gfi_standard, ari, dcr, cli]


def main():
    stats_path, texts_path = sys.argv[1], sys.argv[2]
    with open(texts_path, encoding="utf-8") as f:
        texts = [line.rstrip("\n") for line in f if line.strip()]
    with open(stats_path, encoding="utf-8") as f:
        stats = [json.loads(line) for line in f if line.strip()]
    if len(texts) != len(stats):
        sys.exit("texts and stats differ in length")
    print("# " + "\t".join(COUNTS + ["fre", "gfi_paper", "gfi_standard",
                                     "ari", "dcr", "cli", "text"]))
    for text, c in zip(texts, stats):
        row = [str(c[k]) for k in COUNTS]
        row += [repr(float(v)) for v in scores(c)]
        row.append(text)
        print("\t".join(row))


if __name__ == "__main__":
    main()
