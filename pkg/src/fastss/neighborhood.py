"""Deletion neighborhoods and residual-key hashing.

A residual of a word is what remains after deleting some character
positions. Two words within edit distance d always share a residual
reachable with at most d deletions from each side, so hashed residuals
make a lossless filter key. Residual strings are never stored: each one is
reduced to a 64-bit FNV-1a hash of a tag byte followed by its UTF-8 bytes.
The tag byte keeps keys of whole words, prefix halves and suffix halves in
disjoint key spaces.

The hash is part of the index file format and must stay bit-stable.
"""

from __future__ import annotations

from enum import IntEnum
from itertools import combinations

__all__ = [
    "HalfTag",
    "delete_positions",
    "deletion_neighborhood",
    "full_neighborhood",
    "hash_residual",
    "residual_keys",
]

_FNV_OFFSET = 0xCBF29CE484222325
_FNV_PRIME = 0x100000001B3
_MASK64 = (1 << 64) - 1


class HalfTag(IntEnum):
    """Key-space tag mixed into every residual hash."""

    WHOLE = 0x00
    PREFIX = 0x01
    SUFFIX = 0x02


def delete_positions(word: str, positions: list[int] | tuple[int, ...]) -> str:
    """Remove the given character positions from ``word``.

    Positions must be strictly increasing and in range; remaining
    characters keep their original order.
    """
    previous = -1
    for p in positions:
        if p <= previous:
            raise ValueError("positions must be strictly increasing")
        if p >= len(word):
            raise ValueError(f"position {p} out of range for word of length {len(word)}")
        previous = p
    return _splice(word, positions)


def _splice(word: str, positions) -> str:
    parts = []
    previous = 0
    for p in positions:
        parts.append(word[previous:p])
        previous = p + 1
    parts.append(word[previous:])
    return "".join(parts)


def deletion_neighborhood(word: str, deletions: int) -> set[str]:
    """All distinct residuals of ``word`` with exactly ``deletions`` removed
    positions. Empty set when more deletions are requested than the word has
    characters."""
    if deletions < 0:
        raise ValueError("deletions must be non-negative")
    if deletions > len(word):
        return set()
    if deletions == 0:
        return {word}
    return {_splice(word, pos) for pos in combinations(range(len(word)), deletions)}


def full_neighborhood(word: str, max_deletions: int) -> set[str]:
    """All distinct residuals reachable with at most ``max_deletions``
    deletions, the word itself included."""
    if max_deletions < 0:
        raise ValueError("max_deletions must be non-negative")
    out = {word}
    for k in range(1, min(max_deletions, len(word)) + 1):
        for pos in combinations(range(len(word)), k):
            out.add(_splice(word, pos))
    return out


def hash_residual(tag: HalfTag, residual: str) -> int:
    """64-bit FNV-1a over the tag byte followed by the residual's UTF-8
    bytes. Deterministic and bit-stable; serialized index files depend on
    it."""
    h = ((_FNV_OFFSET ^ tag) * _FNV_PRIME) & _MASK64
    for byte in residual.encode("utf-8"):
        h = ((h ^ byte) * _FNV_PRIME) & _MASK64
    return h


def residual_keys(word: str, max_deletions: int, tag: HalfTag) -> set[int]:
    """Hashed keys of the full deletion neighborhood of ``word``."""
    return {hash_residual(tag, r) for r in full_neighborhood(word, max_deletions)}
