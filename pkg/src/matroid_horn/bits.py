"""Subsets of a ground set {0, ..., n-1} stored as int bitmasks."""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Iterator

MAX_N = 64


def vset(elements: Iterable[int] = ()) -> int:
    """Bitmask of an iterable of element indices."""
    mask = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e}")
        mask |= 1 << e
    return mask


def members(mask: int) -> list[int]:
    """Sorted element indices of ``mask``."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def size(mask: int) -> int:
    return mask.bit_count()


def full(n: int) -> int:
    return (1 << n) - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def sort_key(mask: int) -> tuple[int, list[int]]:
    """Canonical order: by size, then lexicographically on sorted members."""
    return (mask.bit_count(), members(mask))


def subsets_of(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` (including 0 and ``mask``)."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def k_subsets(n: int, k: int) -> Iterator[int]:
    """All k-element subsets of [n] in lexicographic order."""
    for combo in combinations(range(n), k):
        yield vset(combo)


def fmt(mask: int) -> str:
    return "{" + ",".join(map(str, members(mask))) + "}"


def check_ground(n: int) -> None:
    if not 0 <= n <= MAX_N:
        raise ValueError(f"ground set size {n} outside 0..{MAX_N}")
