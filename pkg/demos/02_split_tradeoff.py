#!/usr/bin/env python3
"""Sweep the splitting threshold and watch the size/time trade-off.

Words longer than the threshold m are cut in half and each half is indexed
with half the error budget, so a long word contributes two small residual
neighborhoods instead of one huge one. Queries pay for it by probing a few
split positions. Around the mean word length, the index shrinks to a
fraction of its unsplit size while queries stay in the same ballpark.
"""

import time

from fastss import FastSSIndex, IndexParams, bundled_words_path, load_dictionary, perturb

dictionary = load_dictionary(bundled_words_path())
print(f"dictionary: {len(dictionary)} words, "
      f"mean length {dictionary.mean_length():.2f}")

d = 3
workload = perturb(dictionary, 300, d, seed=1)

print(f"\n{'m':>5} {'stored pairs':>14} {'vs unsplit':>10} {'build':>8} {'query':>10}")
baseline_pairs = None
for m in [None, 16, 12, 10, 8, 7, 6, 5]:
    start = time.perf_counter()
    index = FastSSIndex.build(dictionary, IndexParams(d, m))
    build_s = time.perf_counter() - start

    start = time.perf_counter()
    for case in workload.cases:
        index.search(case.query)
    query_us = (time.perf_counter() - start) / len(workload) * 1e6

    pairs = index.stats.stored_pairs
    if baseline_pairs is None:
        baseline_pairs = pairs
    label = "inf" if m is None else m
    print(f"{label:>5} {pairs:>14,} {pairs / baseline_pairs:>9.1%} "
          f"{build_s:>7.2f}s {query_us:>8.0f}us")

print("\nsplitting near the mean length keeps queries cheap while the "
      "index shrinks by two thirds; very small m splits everything and "
      "queries pay for many probe positions")
