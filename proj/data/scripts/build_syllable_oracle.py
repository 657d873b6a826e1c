#!/usr/bin/env python3
"""Builds data/syllable_oracle.tsv from the CMU Pronouncing Dictionary.

Syllable counts are the number of vowel phones (phones carrying a stress
digit). Only words whose pronunciations all agree on the count are kept.
Words come from the wordfreq top-5000 English list and are sampled per
syllable-count stratum with a fixed seed.

    pip install cmudict wordfreq
    python3 data/scripts/build_syllable_oracle.py > data/syllable_oracle.tsv
"""
import random
import re

import cmudict
from wordfreq import top_n_list

STRATA = {1: 60, 2: 60, 3: 50, 4: 30}


def syllables(phones):
    return sum(1 for p in phones if p[-1].isdigit())


def main():
    pron = cmudict.dict()
    buckets = {k: [] for k in STRATA}
    for word in top_n_list("en", 5000):
        if not re.fullmatch(r"[a-z]{2,}", word) or word not in pron:
            continue
        counts = {syllables(p) for p in pron[word]}
        if len(counts) != 1:
            continue
        n = min(counts.pop(), 4)
        if n == 0:
            continue
        buckets[n].append(word)
    rng = random.Random(20231)
    print("# word<TAB>syllables  (CMU Pronouncing Dictionary, wordfreq top-5000)")
    rows = []
    for n, size in STRATA.items():
        for w in rng.sample(buckets[n], size):
            rows.append((w, syllables(pron[w][0])))
    for w, n in sorted(rows):
        print(f"{w}\t{n}")


if __name__ == "__main__":
    main()
