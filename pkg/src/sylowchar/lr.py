"""Littlewood-Richardson coefficients and filling types of skew shapes.

A filling of ``[outer / inner]`` is read right to left, top to bottom.  Rows
weakly increase, columns strictly increase, and the reading word must be a
lattice word.  Because a row is weakly increasing, a row filling is just a
block composition ``(a_1, a_2, ...)`` (``a_e`` cells holding ``e``), and the
reading order visits the blocks from the largest value down; so the lattice
condition for the whole row only involves the content of the rows above:
``content[e] + a_e <= content[e-1]``.  Rows are therefore processed one at a
time, memoised on (row, content, the part of the row that the next row
sees).

``lr_fillings`` is a separate cell-by-cell enumerator that materialises every
filling; it is used for the structural checks and as a cross-check of the
row-by-row counter.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import factorial
from typing import Iterable, Iterator, Literal

from .characters import centralizer_order, mn_character
from .partitions import (
    BoundError,
    Partition,
    SkewShape,
    cells_to_partition,
    contains,
    iter_partitions,
    subpartitions,
)

__all__ = [
    "LR_TYPES_BOUND",
    "ORACLE_BOUND",
    "is_good_sequence",
    "lr_fillings",
    "lr_coefficient",
    "lr_positive",
    "lr_types",
    "unique_filling_classification",
    "iterated_lr_multiplicity",
    "restriction_oracle",
    "satisfies_row_bound",
]

LR_TYPES_BOUND = 30
ORACLE_BOUND = 12

Classification = Literal["straight", "rotated-straight", "multiple"]


def is_good_sequence(seq: Iterable[int]) -> bool:
    """Every entry v > 1 has seen strictly more (v-1)'s than v's before it."""
    counts: dict[int, int] = {}
    for v in seq:
        if v < 1:
            return False
        if v > 1 and counts.get(v - 1, 0) <= counts.get(v, 0):
            return False
        counts[v] = counts.get(v, 0) + 1
    return True


def _rows(outer: tuple[int, ...], inner: tuple[int, ...]) -> tuple[tuple[int, int], ...]:
    return tuple(
        (inner[i] if i < len(inner) else 0, outer[i]) for i in range(len(outer))
    )


def _solve(outer: tuple[int, ...], inner: tuple[int, ...], target, mode: str):
    """Row-by-row LR enumeration.

    mode "types": frozenset of contents; "count": number of fillings of content
    ``target``; "exists": whether such a filling exists.
    """
    rows = _rows(outer, inner)
    nrows = len(rows)
    memo: dict = {}

    def row_fills(content, a, b, above_start, above_fill):
        L = len(content)

        def rec(e, pos, counts):
            remaining = b - pos
            if remaining == 0:
                yield counts
                return
            if e > L + 1:
                return
            if e == 1:
                cap = remaining
            else:
                cap = content[e - 2] - (content[e - 1] if e - 1 < L else 0)
            if target is not None:
                if e > len(target):
                    return
                cap = min(cap, target[e - 1] - (content[e - 1] if e - 1 < L else 0))
            cap = min(cap, remaining)
            # above row is weakly increasing, so feasible block lengths form a prefix
            c = cap
            while c > 0:
                j = pos + c - 1
                col = j - above_start
                if col < 0 or col >= len(above_fill) or above_fill[col] < e:
                    break
                c -= 1
            for k in range(c, -1, -1):
                yield from rec(e + 1, pos + k, counts + (k,))

        return rec(1, a, ())

    def rec(i, content, above_start, above_fill):
        if i == nrows:
            if mode == "types":
                return frozenset((content,))
            hit = content == target
            return hit if mode == "exists" else int(hit)
        key = (i, content, above_start, above_fill)
        if key in memo:
            return memo[key]
        a, b = rows[i]
        # only columns below which the next row has cells matter downstream
        keep = rows[i + 1][1] - a if i + 1 < nrows else 0
        if mode == "types":
            acc = set()
        elif mode == "count":
            acc = 0
        else:
            acc = False
        for counts in row_fills(content, a, b, above_start, above_fill):
            L = max(len(content), len(counts))
            new = tuple(
                (content[v] if v < len(content) else 0) + (counts[v] if v < len(counts) else 0)
                for v in range(L)
            )
            while new and new[-1] == 0:
                new = new[:-1]
            fill = []
            for e, c in enumerate(counts, 1):
                fill.extend([e] * c)
            res = rec(i + 1, new, a, tuple(fill[: max(keep, 0)]))
            if mode == "types":
                acc |= res
            elif mode == "count":
                acc += res
            elif res:
                acc = True
                break
        if mode == "types":
            acc = frozenset(acc)
        memo[key] = acc
        return acc

    # no row above row 0: every column lies left of the sentinel start
    return rec(0, (), outer[0] if outer else 0, ())


def _check_triple(lam, mu, nu):
    lam, mu, nu = Partition(lam), Partition(mu), Partition(nu)
    if lam.size != mu.size + nu.size:
        raise ValueError(
            f"size mismatch: |lambda|={lam.size} but |mu|+|nu|={mu.size + nu.size}"
        )
    return lam, mu, nu


@lru_cache(maxsize=None)
def _lr_count(lam, mu, nu) -> int:
    if not nu:
        return int(lam == mu)
    return _solve(lam, mu, nu, "count")


@lru_cache(maxsize=None)
def _lr_exists(lam, mu, nu) -> bool:
    if not nu:
        return lam == mu
    return _solve(lam, mu, nu, "exists")


def lr_coefficient(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """c^lambda_{mu,nu}: LR fillings of ``[lam / mu]`` of content ``nu``."""
    lam, mu, nu = _check_triple(lam, mu, nu)
    if not contains(lam, mu):
        return 0
    return _lr_count(tuple(lam), tuple(mu), tuple(nu))


def lr_positive(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> bool:
    """c^lambda_{mu,nu} > 0, stopping at the first filling found."""
    lam, mu, nu = _check_triple(lam, mu, nu)
    if not contains(lam, mu):
        return False
    return _lr_exists(tuple(lam), tuple(mu), tuple(nu))


@lru_cache(maxsize=4096)
def _lr_types(outer, inner) -> frozenset:
    return frozenset(Partition(t) for t in _solve(outer, inner, None, "types"))


def lr_types(shape: SkewShape, bound: int = LR_TYPES_BOUND) -> frozenset[Partition]:
    """The set of contents realised by LR fillings of ``shape``."""
    if shape.size > bound:
        raise BoundError(f"|shape|={shape.size} exceeds the LR type bound {bound}")
    return _lr_types(tuple(shape.outer), tuple(shape.inner))


def lr_fillings(shape: SkewShape, content: Iterable[int] | None = None) -> Iterator[dict]:
    """Every LR filling as a ``{(row, col): entry}`` dict, cell by cell in reading order."""
    target = None if content is None else tuple(content)
    order = [(i, j) for i, (a, b) in enumerate(shape.rows()) for j in range(b - 1, a - 1, -1)]
    cells = set(order)
    filling: dict[tuple[int, int], int] = {}
    counts = [0] * (shape.size + 2)

    def rec(k):
        if k == len(order):
            if target is None or tuple(c for c in counts[1:] if c) == target:
                yield dict(filling)
            return
        i, j = order[k]
        hi = filling.get((i, j + 1), shape.size) if (i, j + 1) in cells else shape.size
        lo = filling[(i - 1, j)] + 1 if (i - 1, j) in cells else 1
        for v in range(lo, hi + 1):
            if v > 1 and counts[v - 1] <= counts[v]:
                continue
            if target is not None and (v > len(target) or counts[v] >= target[v - 1]):
                continue
            filling[(i, j)] = v
            counts[v] += 1
            yield from rec(k + 1)
            counts[v] -= 1
            del filling[(i, j)]

    return rec(0)


def satisfies_row_bound(shape: SkewShape, filling: dict) -> bool:
    """Entries in the t-th non-empty row of the shape are at most t."""
    nonempty = sorted({i for i, _ in filling})
    rank = {r: t for t, r in enumerate(nonempty, 1)}
    return all(v <= rank[i] for (i, _), v in filling.items())


def unique_filling_classification(shape: SkewShape) -> Classification:
    if cells_to_partition(shape.normalized_cells()) is not None:
        return "straight"
    if cells_to_partition(shape.rotated_cells()) is not None:
        return "rotated-straight"
    return "multiple"


def iterated_lr_multiplicity(
    lam: Iterable[int], factors: Iterable[Iterable[int]], positive_only: bool = False
) -> int:
    """Multiplicity of chi^{mu_1} x ... x chi^{mu_q} in the restriction of chi^lam.

    Peels the last factor: sum over nu of c^lam_{nu, mu_q} * mult(nu; mu_1..mu_{q-1}).
    With ``positive_only`` the result is 0/1 and the search stops at the first hit.
    """
    lam = Partition(lam)
    factors = [tuple(Partition(f)) for f in factors]
    if sum(map(sum, factors)) != lam.size:
        raise ValueError(
            f"size mismatch: |lambda|={lam.size}, factor sizes sum to {sum(map(sum, factors))}"
        )
    memo: dict = {}

    def rec(shape: tuple[int, ...], q: int) -> int:
        if q == 0:
            return int(not shape)
        if q == 1:
            return int(shape == factors[0])
        key = (shape, q)
        if key in memo:
            return memo[key]
        last = factors[q - 1]
        total = 0
        for nu in subpartitions(shape, sum(shape) - sum(last)):
            if positive_only:
                if _lr_exists(shape, nu, last) and rec(nu, q - 1):
                    total = 1
                    break
            else:
                c = _lr_count(shape, nu, last)
                if c:
                    total += c * rec(nu, q - 1)
        memo[key] = total
        return total

    return rec(tuple(lam), len(factors))


def restriction_oracle(lam: Iterable[int], mu: Iterable[int], nu: Iterable[int]) -> int:
    """<chi^lam restricted to S_m x S_k, chi^mu x chi^nu> from character values alone."""
    lam, mu, nu = _check_triple(lam, mu, nu)
    if lam.size > ORACLE_BOUND:
        raise BoundError(f"restriction oracle is limited to n <= {ORACLE_BOUND}")
    m, k = mu.size, nu.size
    total = 0
    for alpha, beta in product(iter_partitions(m), iter_partitions(k)):
        weight = (factorial(m) // centralizer_order(alpha)) * (
            factorial(k) // centralizer_order(beta)
        )
        total += (
            weight
            * mn_character(lam, alpha + beta)
            * mn_character(mu, alpha)
            * mn_character(nu, beta)
        )
    value, rem = divmod(total, factorial(m) * factorial(k))
    assert rem == 0, "inner product must be an integer"
    return value
