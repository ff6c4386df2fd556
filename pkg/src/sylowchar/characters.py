"""Irreducible characters of S_n by the Murnaghan-Nakayama rule.

Rim hooks are removed on the beta-set (abacus) of the partition: removing an
r-rim-hook moves one bead from position b to an empty position b - r, with
sign (-1)^(number of beads strictly between).  Cycles are consumed largest
first and fixed points are finished off with the hook-length formula.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable

from .partitions import Partition, conjugate

__all__ = [
    "mn_character",
    "degree",
    "centralizer_order",
    "class_size",
    "rim_hook_removals",
]


def rim_hook_removals(lam: tuple[int, ...], r: int) -> list[tuple[tuple[int, ...], int]]:
    """All ``(lam minus an r-rim-hook, (-1)^leg)`` pairs."""
    L = len(lam)
    beta = [lam[i] + L - 1 - i for i in range(L)]
    present = set(beta)
    out = []
    for idx, b in enumerate(beta):
        t = b - r
        if t < 0 or t in present:
            continue
        between = sum(1 for c in beta if t < c < b)
        new_beta = sorted(beta[:idx] + [t] + beta[idx + 1 :], reverse=True)
        new = tuple(x - (L - 1 - i) for i, x in enumerate(new_beta))
        out.append((tuple(x for x in new if x), -1 if between % 2 else 1))
    return out


@lru_cache(maxsize=None)
def _degree(lam: tuple[int, ...]) -> int:
    if not lam:
        return 1
    conj = conjugate(lam)
    prod = 1
    for i, row in enumerate(lam):
        for j in range(row):
            prod *= (row - j) + (conj[j] - i) - 1
    d, rem = divmod(factorial(sum(lam)), prod)
    assert rem == 0, "hook product must divide n!"
    return d


def degree(lam: Iterable[int]) -> int:
    """chi^lambda(1) via the hook-length formula."""
    return _degree(tuple(Partition(lam)))


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], cycles: tuple[int, ...]) -> int:
    # cycles: the non-trivial cycle lengths still to process, weakly decreasing
    if not cycles:
        return _degree(lam)
    r, rest = cycles[0], cycles[1:]
    total = 0
    for sub, sign in rim_hook_removals(lam, r):
        v = _mn(sub, rest)
        if v:
            total += sign * v
    return total


def mn_character(lam: Iterable[int], cycle_type: Iterable[int]) -> int:
    """chi^lambda at a permutation of the given cycle type."""
    lam = Partition(lam)
    cycles = tuple(sorted(cycle_type, reverse=True))
    if any(c < 1 for c in cycles):
        raise ValueError(f"cycle lengths must be positive: {cycles}")
    if sum(cycles) != lam.size:
        raise ValueError(f"size mismatch: |lambda|={lam.size}, |cycle type|={sum(cycles)}")
    return _mn(tuple(lam), tuple(c for c in cycles if c > 1))


def centralizer_order(cycle_type: Iterable[int]) -> int:
    """z_c = prod_i i^{m_i} m_i!"""
    z = 1
    for length, mult in Partition(sorted(cycle_type, reverse=True)).multiplicities().items():
        z *= length**mult * factorial(mult)
    return z


def class_size(cycle_type: Iterable[int]) -> int:
    c = tuple(cycle_type)
    size, rem = divmod(factorial(sum(c)), centralizer_order(c))
    assert rem == 0
    return size


def cache_clear() -> None:
    _mn.cache_clear()
    _degree.cache_clear()
