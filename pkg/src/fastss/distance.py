"""Levenshtein edit distance: a plain full-table version used as the ground
truth everywhere, and a banded version for verifying candidates against a
fixed distance threshold.

Strings are compared as sequences of Unicode code points; insertions,
deletions and substitutions all cost 1.
"""

from __future__ import annotations

__all__ = ["full_edit_distance", "banded_edit_distance"]


def full_edit_distance(a: str, b: str) -> int:
    """Exact edit distance between ``a`` and ``b``.

    Computes the complete dynamic-programming table (two rows at a time)
    with no shortcuts or early exits. Deliberately boring: every other
    distance computation in this package is checked against it.
    """
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return len(a)

    previous = list(range(len(b) + 1))
    for i, ca in enumerate(a, 1):
        current = [i]
        append = current.append
        for j, cb in enumerate(b, 1):
            append(min(current[j - 1] + 1,
                       previous[j] + 1,
                       previous[j - 1] + (ca != cb)))
        previous = current
    return previous[-1]


def banded_edit_distance(a: str, b: str, bound: int) -> int | None:
    """Edit distance restricted to a diagonal band of width ``2*bound + 1``.

    Returns the exact distance when it is <= ``bound`` and None when the
    distance is larger. Fills O(bound * min(len(a), len(b))) cells and stops
    as soon as a whole band row exceeds the bound, which certifies that no
    alignment within the bound exists.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    if len(a) > len(b):
        a, b = b, a
    n, m = len(a), len(b)
    if m - n > bound:
        return None  # length difference is a lower bound for the distance

    width = 2 * bound + 1
    too_far = bound + 1
    # prev[k] holds D[i-1][j] with j = (i-1) - bound + k; cells outside the
    # band (or past the bound) are clamped to too_far.
    prev = [too_far] * width
    for k in range(width):
        j = k - bound
        if 0 <= j <= min(m, bound):
            prev[k] = j

    for i in range(1, n + 1):
        current = [too_far] * width
        row_min = too_far
        ca = a[i - 1]
        for k in range(width):
            j = i - bound + k
            if j < 0 or j > m:
                continue
            if j == 0:
                value = i
            else:
                value = prev[k] + (ca != b[j - 1])
                if k + 1 < width and prev[k + 1] + 1 < value:
                    value = prev[k + 1] + 1
                if k > 0 and current[k - 1] + 1 < value:
                    value = current[k - 1] + 1
                if value > too_far:
                    value = too_far
            current[k] = value
            if value < row_min:
                row_min = value
        if row_min > bound:
            return None
        prev = current

    distance = prev[m - n + bound]
    return distance if distance <= bound else None
