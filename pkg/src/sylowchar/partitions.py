"""Integer partitions, Young diagrams, skew shapes and p-adic digits.

Partitions are immutable tuples (``Partition`` subclasses ``tuple``) so they
hash and compare like plain tuples and can be used directly as dict keys.
The JSON rendering of a partition is an array of its parts, largest first.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator

__all__ = [
    "BoundError",
    "Partition",
    "SkewShape",
    "PAdicExpansion",
    "max_degree",
    "conjugate",
    "contains",
    "iter_partitions",
    "enumerate_partitions",
    "partition_count",
    "subpartitions",
    "p_adic",
    "is_odd_prime",
    "parse_partition",
    "format_partition",
    "hook",
]

PART_CEILING = 2**32
DEFAULT_MAX_N = 60


class BoundError(ValueError):
    """A size guard was exceeded."""


def max_degree() -> int:
    """Desk-scale bound on n; ``SYLOWCHAR_MAX_N`` overrides the default of 60."""
    raw = os.environ.get("SYLOWCHAR_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"SYLOWCHAR_MAX_N must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("SYLOWCHAR_MAX_N must be nonnegative")
    return value


class Partition(tuple):
    """A weakly decreasing tuple of positive integers.

    >>> Partition([5, 4]).conjugate()
    (2, 2, 2, 2, 1)
    """

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(parts)
        prev = PART_CEILING
        for x in parts:
            if not isinstance(x, int) or isinstance(x, bool):
                raise TypeError(f"partition parts must be integers, got {x!r}")
            if x < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if x > prev:
                if prev == PART_CEILING:
                    raise ValueError(f"partition part exceeds 2^32: {x}")
                raise ValueError(f"partition parts must be weakly decreasing: {parts}")
            prev = x
        return super().__new__(cls, parts)

    def __repr__(self) -> str:
        return "(" + ",".join(map(str, self)) + ")"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), reading missing parts as 0."""
        return self[i] if i < len(self) else 0

    def conjugate(self) -> Partition:
        return conjugate(self)

    def contains(self, other: Iterable[int]) -> bool:
        return contains(self, other)

    def is_hook(self) -> bool:
        return len(self) <= 1 or self[1] == 1

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for x in self:
            out[x] = out.get(x, 0) + 1
        return out


def hook(arm: int, leg: int) -> Partition:
    """The hook partition ``(arm+1, 1^leg)``."""
    return Partition((arm + 1,) + (1,) * leg)


def conjugate(lam: Iterable[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x > j) for j in range(lam[0]))


def contains(lam: Iterable[int], mu: Iterable[int]) -> bool:
    """True iff the diagram of ``mu`` sits inside the diagram of ``lam``."""
    lam, mu = tuple(lam), tuple(mu)
    if len(mu) > len(lam):
        return False
    return all(a <= b for a, b in zip(mu, lam))


def iter_partitions(n: int) -> Iterator[tuple[int, ...]]:
    """Yield plain tuples for every partition of n in reverse lexicographic order.

    Zoghbi-Stojmenovic ZS1; ``(n)`` comes first and ``(1^n)`` last.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield ()
        return
    x = [1] * (n + 1)
    x[1] = n
    m, h = 1, 1
    yield (n,)
    while x[1] != 1:
        if x[h] == 2:
            m += 1
            x[h] = 1
            h -= 1
        else:
            r = x[h] - 1
            t = m - h + 1
            x[h] = r
            while t >= r:
                h += 1
                x[h] = r
                t -= r
            if t == 0:
                m = h
            else:
                m = h + 1
                if t > 1:
                    h += 1
                    x[h] = t
        yield tuple(x[1 : m + 1])


def enumerate_partitions(n: int, bound: int | None = None) -> list[Partition]:
    """All partitions of n, reverse lexicographic, as ``Partition`` values."""
    limit = max_degree() if bound is None else bound
    if n > limit:
        raise BoundError(f"n={n} exceeds the partition enumeration bound {limit}")
    return [Partition(t) for t in iter_partitions(n)]


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence (independent of enumeration)."""
    if n < 0:
        return 0
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def subpartitions(lam: tuple[int, ...], size: int) -> Iterator[tuple[int, ...]]:
    """Partitions of ``size`` whose diagram lies inside ``lam``."""

    def rec(i: int, remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        if i >= len(lam):
            return
        # rows below i can hold at most sum(min(lam_j, x)) cells
        hi = min(lam[i], cap, remaining)
        for x in range(hi, 0, -1):
            room = sum(min(v, x) for v in lam[i + 1 :])
            if remaining - x > room:
                break
            for rest in rec(i + 1, remaining - x, x):
                yield (x,) + rest

    if size < 0 or size > sum(lam):
        return iter(())
    return rec(0, size, PART_CEILING)


@dataclass(frozen=True)
class SkewShape:
    """The cells of ``[outer]`` not in ``[inner]``."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", Partition(self.outer))
        object.__setattr__(self, "inner", Partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ValueError(f"{self.inner!r} does not fit inside {self.outer!r}")
        if self.size < 1:
            raise ValueError("a skew shape needs at least one cell")

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def rows(self) -> list[tuple[int, int]]:
        """Half-open column ranges ``(start, stop)`` for every row of ``outer``."""
        return [(self.inner.part(i), self.outer[i]) for i in range(len(self.outer))]

    @cached_property
    def cells(self) -> frozenset[tuple[int, int]]:
        return frozenset((i, j) for i, (a, b) in enumerate(self.rows()) for j in range(a, b))

    def normalized_cells(self) -> frozenset[tuple[int, int]]:
        return _normalize(self.cells)

    def rotated_cells(self) -> frozenset[tuple[int, int]]:
        """Cells of the 180 degree rotation, translated to the origin."""
        return _normalize((-i, -j) for i, j in self.cells)

    def row_lengths(self) -> list[int]:
        return [b - a for a, b in self.rows() if b > a]

    def __str__(self) -> str:
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


def _normalize(cells: Iterable[tuple[int, int]]) -> frozenset[tuple[int, int]]:
    cells = list(cells)
    r0 = min(i for i, _ in cells)
    c0 = min(j for _, j in cells)
    return frozenset((i - r0, j - c0) for i, j in cells)


def diagram(lam: Iterable[int]) -> frozenset[tuple[int, int]]:
    return frozenset((i, j) for i, x in enumerate(lam) for j in range(x))


def cells_to_partition(cells: frozenset[tuple[int, int]]) -> Partition | None:
    """The partition whose diagram is exactly ``cells`` (already at origin), else None."""
    if not cells:
        return Partition()
    nrows = max(i for i, _ in cells) + 1
    parts = []
    for i in range(nrows):
        row = sorted(j for r, j in cells if r == i)
        if not row or row != list(range(len(row))):
            return None
        parts.append(len(row))
    if any(a < b for a, b in zip(parts, parts[1:])):
        return None
    return Partition(parts)


@dataclass(frozen=True)
class PAdicExpansion:
    """``n = sum(digits[i] * prime**i)``; digits are least significant first."""

    prime: int
    digits: tuple[int, ...]

    @property
    def value(self) -> int:
        return sum(b * self.prime**i for i, b in enumerate(self.digits))

    @property
    def digit_sum(self) -> int:
        return sum(self.digits)


def is_odd_prime(p: int) -> bool:
    if not isinstance(p, int) or p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def require_odd_prime(p: int) -> None:
    if not is_odd_prime(p):
        raise ValueError(f"p must be an odd prime, got {p}")


def p_adic(n: int, p: int) -> PAdicExpansion:
    require_odd_prime(p)
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    digits = []
    while n:
        n, b = divmod(n, p)
        digits.append(b)
    return PAdicExpansion(p, tuple(digits))


_TOKEN = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_partition(text: str) -> Partition:
    """Parse ``"5,4"`` or exponent notation such as ``"2^4,1"``.

    The empty string (or ``"()"``) is the empty partition.
    """
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1].strip()
    if not s:
        return Partition()
    parts: list[int] = []
    for token in s.split(","):
        m = _TOKEN.match(token)
        if m is None:
            raise ValueError(f"malformed partition text: {text!r}")
        value = int(m.group(1))
        reps = int(m.group(2)) if m.group(2) is not None else 1
        if value == 0:
            raise ValueError(f"partition parts must be positive: {text!r}")
        parts.extend([value] * reps)
    return Partition(parts)


def format_partition(lam: Iterable[int], compact: bool = False) -> str:
    """Comma-separated parts; ``compact`` groups repeats as ``a^b``."""
    lam = tuple(lam)
    if not compact:
        return ",".join(map(str, lam))
    out = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        out.append(str(lam[i]) if j - i == 1 else f"{lam[i]}^{j - i}")
        i = j
    return ",".join(out)
