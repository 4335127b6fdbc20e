"""Bitmask subsets of small ordered ground sets, and set compositions."""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from math import comb
from typing import Iterable, Iterator, Sequence

from .errors import InvalidComposition


def popcount(m: int) -> int:
    return bin(m).count("1")


def bits(m: int) -> list[int]:
    """Indices of the set bits of ``m``, ascending."""
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def full_mask(n: int) -> int:
    return (1 << n) - 1


def submasks(m: int) -> list[int]:
    """All submasks of ``m`` (including 0 and ``m``) in increasing order."""
    out = []
    s = m
    while True:
        out.append(s)
        if s == 0:
            break
        s = (s - 1) & m
    out.reverse()
    return out


def compress(m: int, within: int) -> int:
    """Re-index ``m`` (a submask of ``within``) relative to the bits of ``within``."""
    out = 0
    j = 0
    for i in bits(within):
        if m >> i & 1:
            out |= 1 << j
        j += 1
    return out


def expand(m: int, within: int) -> int:
    """Inverse of :func:`compress`."""
    out = 0
    for j, i in enumerate(bits(within)):
        if m >> j & 1:
            out |= 1 << i
    return out


def mask_of(labels: Sequence[str], subset: Iterable[str]) -> int:
    index = {a: i for i, a in enumerate(labels)}
    m = 0
    for a in subset:
        try:
            m |= 1 << index[a]
        except KeyError:
            raise InvalidComposition(f"label {a!r} not in ground set {list(labels)}") from None
    return m


def labels_of(labels: Sequence[str], m: int) -> tuple[str, ...]:
    return tuple(labels[i] for i in bits(m))


@lru_cache(maxsize=None)
def _compositions(rest: int) -> tuple[tuple[int, ...], ...]:
    if rest == 0:
        return ((),)
    out = []
    for first in submasks(rest)[1:]:
        for tail in _compositions(rest & ~first):
            out.append((first,) + tail)
    return tuple(out)


def compositions(m: int) -> tuple[tuple[int, ...], ...]:
    """Set compositions of ``m``: ordered tuples of nonempty disjoint blocks.

    Blocks are chosen lexicographically by bitmask, so the output order is
    deterministic.
    """
    return _compositions(m)


def ordered_bell(n: int) -> int:
    """Number of set compositions of an n-set (Fubini numbers)."""
    a = [1]
    for k in range(1, n + 1):
        a.append(sum(binom(k, j) * a[k - j] for j in range(1, k + 1)))
    return a[n]


def check_composition(blocks: Sequence[int], m: int, allow_empty: bool = False) -> None:
    seen = 0
    for b in blocks:
        if b == 0 and not allow_empty:
            raise InvalidComposition("empty block in composition")
        if b & seen:
            raise InvalidComposition("blocks overlap")
        seen |= b
    if seen != m:
        raise InvalidComposition("blocks do not cover the ground set")


def set_partitions(m: int) -> Iterator[tuple[int, ...]]:
    """Unordered set partitions of ``m``, each as a tuple of blocks sorted by mask."""
    if m == 0:
        yield ()
        return
    low = m & -m
    rest = m & ~low
    for sub in submasks(rest):
        block = low | sub
        for tail in set_partitions(rest & ~sub):
            yield tuple(sorted((block,) + tail))


def linear_orders(m: int) -> Iterator[tuple[int, ...]]:
    """All orderings of the bit indices of ``m``."""
    return permutations(bits(m))


def binom(n: int, k: int) -> int:
    if k < 0 or k > n:
        return 0
    return comb(n, k)
