"""Average-case predictions for the unsplit index over uniform random
dictionaries.

For n random words of length L over an alphabet of size s, the expected
number of residual collisions between a random query and the dictionary
is n * C(L, d)^2 * s^(d - L). It overestimates the observed candidate
count, because distinct deletion sets can produce the same residual and
each dictionary word is only verified once.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

__all__ = ["CollisionModel", "expected_candidates", "markov_bound"]


@dataclass(frozen=True)
class CollisionModel:
    """Uniform random dictionary: ``dictionary_size`` words of exactly
    ``word_length`` characters over ``alphabet_size`` letters, queried at
    ``max_distance``."""

    dictionary_size: int
    word_length: int
    max_distance: int
    alphabet_size: int

    def __post_init__(self):
        if self.dictionary_size < 0:
            raise ValueError("dictionary_size must be non-negative")
        if not 0 <= self.max_distance <= self.word_length:
            raise ValueError("max_distance must lie in [0, word_length]")
        if self.alphabet_size < 1:
            raise ValueError("alphabet_size must be positive")


def _collision_rate(model: CollisionModel) -> Fraction:
    # C(L, d)^2 / s^(L - d), kept exact until the final conversion
    pairs = comb(model.word_length, model.max_distance) ** 2
    return Fraction(pairs,
                    model.alphabet_size ** (model.word_length - model.max_distance))


def expected_candidates(model: CollisionModel) -> float:
    """Expected residual collisions per query against the whole
    dictionary. Exact big-integer evaluation, converted to float last."""
    return float(model.dictionary_size * _collision_rate(model))


def markov_bound(model: CollisionModel, speedup: float) -> float:
    """Upper bound on the probability that a query collides with at least
    dictionary_size / speedup residuals, i.e. that the filter speeds up a
    scan by less than ``speedup``."""
    if speedup <= 0:
        raise ValueError("speedup must be positive")
    return float(_collision_rate(model) / Fraction(speedup))
