"""Reference search methods the index is measured against: an exhaustive
scan over the whole dictionary and a BK-tree.

The scan is the ground truth for losslessness checks. It evaluates the
full distance table for every dictionary word; the only liberty taken is
that the tables for all words are filled simultaneously with numpy, which
is cross-checked against the scalar implementation in the test suite.
"""

from __future__ import annotations

import numpy as np

from .distance import full_edit_distance
from .index import Dictionary, Match

__all__ = ["NaiveScanner", "naive_scan", "BKTree"]

_PAD = 0x110000  # above every valid code point, never equal to query chars


def _codepoints(word: str) -> np.ndarray:
    return np.frombuffer(word.encode("utf-32-le"), dtype=np.uint32)


class NaiveScanner:
    """Scans a fixed dictionary; encode once, query many times."""

    def __init__(self, dictionary: Dictionary):
        self._dictionary = dictionary
        n = len(dictionary)
        self._lengths = np.fromiter((len(w) for w in dictionary),
                                    dtype=np.int64, count=n)
        width = int(self._lengths.max()) if n else 0
        self._matrix = np.full((n, width), _PAD, dtype=np.uint32)
        for i, word in enumerate(dictionary):
            self._matrix[i, :len(word)] = _codepoints(word)

    def distances(self, query: str) -> np.ndarray:
        """Exact edit distance from ``query`` to every dictionary word.

        One DP row per query character, vectorized across all words. Rows
        are kept shifted by their column index, which turns the in-row
        insertion dependency into a plain running minimum: a horizontal
        run of insertions costs exactly 1 per skipped column, so in
        shifted space it costs nothing.
        """
        n, width = self._matrix.shape
        if n == 0:
            return np.empty(0, dtype=np.int64)
        dtype = np.int16 if width + len(query) < 30_000 else np.int64
        offsets = np.arange(width + 1, dtype=dtype)
        # shifted row for the empty query prefix: D(0, j) - j = 0
        row = np.zeros((n, width + 1), dtype=dtype)
        staged = np.empty_like(row)
        vertical = np.empty((n, width), dtype=dtype)
        same = np.empty(self._matrix.shape, dtype=bool)
        for i, qc in enumerate(_codepoints(query), 1):
            # in shifted space: diagonal costs -1 on equal characters and
            # 0 otherwise, deleting the query character costs +1, and an
            # insertion run costs 0, so it becomes a running minimum.
            np.equal(self._matrix, qc, out=same)
            np.subtract(row[:, :-1], same, out=staged[:, 1:])
            np.add(row[:, 1:], 1, out=vertical)
            np.minimum(staged[:, 1:], vertical, out=staged[:, 1:])
            staged[:, 0] = i
            np.minimum.accumulate(staged, axis=1, out=staged)
            row, staged = staged, row
        return (row[np.arange(n), self._lengths]
                + self._lengths).astype(np.int64)

    def scan(self, query: str, max_distance: int) -> list[Match]:
        """All words within ``max_distance``, sorted by (distance, id)."""
        dists = self.distances(query)
        hits = np.flatnonzero(dists <= max_distance)
        matches = [Match(int(i), int(dists[i])) for i in hits]
        matches.sort(key=lambda match: (match.distance, match.word_id))
        return matches


def naive_scan(dictionary: Dictionary, query: str, max_distance: int) -> list[Match]:
    """One-shot exhaustive scan. For repeated queries against the same
    dictionary, build a NaiveScanner once instead."""
    return NaiveScanner(dictionary).scan(query, max_distance)


class _Node:
    __slots__ = ("word_id", "children")

    def __init__(self, word_id: int):
        self.word_id = word_id
        self.children: dict[int, _Node] = {}


class BKTree:
    """Metric tree over a dictionary: each edge is labeled with the exact
    distance between child and parent, and queries prune edges whose label
    lies outside [v - d, v + d] by the triangle inequality.

    One word per node, inserted in dictionary order, so trees and their
    traversal statistics are reproducible.
    """

    __slots__ = ("_dictionary", "_root")

    def __init__(self, dictionary: Dictionary, root: _Node):
        self._dictionary = dictionary
        self._root = root

    @classmethod
    def build(cls, dictionary: Dictionary) -> "BKTree":
        if len(dictionary) == 0:
            raise ValueError("cannot build a BK-tree from an empty dictionary")
        words = dictionary.words
        root = _Node(0)
        for word_id in range(1, len(words)):
            word = words[word_id]
            node = root
            while True:
                dist = full_edit_distance(words[node.word_id], word)
                child = node.children.get(dist)
                if child is None:
                    node.children[dist] = _Node(word_id)
                    break
                node = child
        return cls(dictionary, root)

    @property
    def dictionary(self) -> Dictionary:
        return self._dictionary

    def query(self, query: str, max_distance: int) -> tuple[list[Match], int]:
        """Returns (matches sorted by (distance, id), number of distance
        computations performed). The computation count is the traversal's
        search-space size, comparable to a candidate-set size."""
        words = self._dictionary.words
        matches = []
        computations = 0
        stack = [self._root]
        while stack:
            node = stack.pop()
            dist = full_edit_distance(words[node.word_id], query)
            computations += 1
            if dist <= max_distance:
                matches.append(Match(node.word_id, dist))
            low, high = dist - max_distance, dist + max_distance
            for label, child in node.children.items():
                if low <= label <= high:
                    stack.append(child)
        matches.sort(key=lambda match: (match.distance, match.word_id))
        return matches, computations

    def node_count(self) -> int:
        count = 0
        stack = [self._root]
        while stack:
            node = stack.pop()
            count += 1
            stack.extend(node.children.values())
        return count

    def check_edge_invariant(self) -> bool:
        """Every edge label equals the exact distance between the words at
        its ends. Used by tests; full traversal."""
        words = self._dictionary.words
        stack = [self._root]
        while stack:
            node = stack.pop()
            for label, child in node.children.items():
                if full_edit_distance(words[node.word_id], words[child.word_id]) != label:
                    return False
                stack.append(child)
        return True
