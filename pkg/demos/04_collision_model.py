#!/usr/bin/env python3
"""Check measured candidate counts against the closed-form expectation.

For a dictionary of n uniform random words of length L over s letters,
the expected number of residual collisions per query is

    E = n * C(L, d)^2 * s^(d - L)

independent of how the collisions are distributed. The formula counts
colliding residual pairs, so it overestimates the deduplicated candidate
set: up to sampling noise, measured means land below it, often well below.
"""

import random
import string

from fastss import (
    CollisionModel,
    Dictionary,
    FastSSIndex,
    IndexParams,
    expected_candidates,
    markov_bound,
)

rng = random.Random(0)
length, sigma = 8, 26


def random_dictionary(n):
    seen = set()
    while len(seen) < n:
        seen.add("".join(rng.choices(string.ascii_lowercase, k=length)))
    return Dictionary(sorted(seen))


print(f"{'n':>7} {'d':>2} {'expected':>12} {'observed':>12}")
for n in (2000, 10000):
    dictionary = random_dictionary(n)
    for d in (1, 2, 3):
        model = CollisionModel(n, length, d, sigma)
        index = FastSSIndex.build(dictionary, IndexParams(d))
        queries = 3000
        total = sum(
            len(index.candidates("".join(rng.choices(string.ascii_lowercase, k=length))))
            for _ in range(queries))
        print(f"{n:>7} {d:>2} {expected_candidates(model):>12.5f} "
              f"{total / queries:>12.5f}")

# The Markov inequality turns the same quantity into a tail bound: how
# likely is a query to collide with more than n/c dictionary entries?
model = CollisionModel(10000, length, 2, sigma)
for c in (10, 100, 1000):
    print(f"P[candidates >= n/{c}] <= {markov_bound(model, c):.3g}")
