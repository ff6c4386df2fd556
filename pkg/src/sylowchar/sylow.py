"""Cycle-type distributions of Sylow p-subgroups of S_n.

P_{p^k} = P_{p^(k-1)} wr C_p.  An element ``(g_1, ..., g_p; s)`` with ``s``
trivial has the disjoint union of the cycle types of the g_i.  With ``s`` a
generator of C_p, the p blocks are visited cyclically and the cycles of the
element are the cycles of the product ``g_p ... g_1`` with every length
multiplied by p.  As the g_i range independently over the base group that
product is uniform: each value is hit ``|P_{p^(k-1)}|^(p-1)`` times.  So

    D_k = conv^p(D_{k-1})  +  (p-1) |P_{p^(k-1)}|^(p-1) * scale_p(D_{k-1}).

Cycle types are keyed internally by multiplicity vectors ``(m_0, m_1, ...)``
with ``m_i`` the number of cycles of length p^i.  The closure enumerator
``enumeration_oracle`` builds the group from explicit generators and is used
to cross-check the recursion.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache

from .partitions import BoundError, Partition, max_degree, p_adic, require_odd_prime

__all__ = [
    "ClassDistribution",
    "PRIME_POWER_BOUND",
    "ORACLE_ORDER_BOUND",
    "prime_power_distribution",
    "distribution",
    "sylow_order",
    "enumeration_oracle",
    "sylow_generators",
]

PRIME_POWER_BOUND = 243
ORACLE_ORDER_BOUND = 10**6

Vector = tuple[int, ...]


@dataclass(frozen=True)
class ClassDistribution:
    """Exact number of elements of P_n of each S_n cycle type."""

    prime: int
    degree: int
    vectors: dict[Vector, int]

    @property
    def counts(self) -> dict[Partition, int]:
        """Cycle type -> count, largest type first (reverse lexicographic)."""
        out = {_vector_to_partition(v, self.prime): c for v, c in self.vectors.items()}
        return dict(sorted(out.items(), key=lambda kv: kv[0], reverse=True))

    @property
    def total(self) -> int:
        return sum(self.vectors.values())

    def __len__(self) -> int:
        return len(self.vectors)

    def __getitem__(self, cycle_type) -> int:
        return self.counts.get(Partition(cycle_type), 0)

    def items(self):
        return self.counts.items()


def _vector_to_partition(v: Vector, p: int) -> Partition:
    parts = []
    for i in range(len(v) - 1, -1, -1):
        parts.extend([p**i] * v[i])
    return Partition(parts)


def _pad(v: Vector, length: int) -> Vector:
    return v + (0,) * (length - len(v))


def _convolve(a: dict[Vector, int], b: dict[Vector, int]) -> dict[Vector, int]:
    length = max(max(map(len, a)), max(map(len, b)))
    out: dict[Vector, int] = {}
    for va, ca in a.items():
        va = _pad(va, length)
        for vb, cb in b.items():
            vb = _pad(vb, length)
            key = tuple(x + y for x, y in zip(va, vb))
            out[key] = out.get(key, 0) + ca * cb
    return out


def _power(d: dict[Vector, int], times: int) -> dict[Vector, int]:
    out: dict[Vector, int] = {(0,): 1}
    for _ in range(times):
        out = _convolve(out, d)
    return out


@lru_cache(maxsize=None)
def _prime_power_vectors(p: int, k: int) -> tuple[tuple[Vector, int], ...]:
    if k == 0:
        return (((1,), 1),)
    prev = dict(_prime_power_vectors(p, k - 1))
    base_order = sum(prev.values())
    # top component trivial
    out = {_pad(v, k + 1): c for v, c in _power(prev, p).items()}
    # top component a generator power: every cycle length scales by p
    weight = (p - 1) * base_order ** (p - 1)
    for v, c in prev.items():
        key = _pad((0,) + v, k + 1)
        out[key] = out.get(key, 0) + weight * c
    return tuple(sorted(out.items()))


def prime_power_distribution(p: int, k: int, bound: int = PRIME_POWER_BOUND) -> ClassDistribution:
    require_odd_prime(p)
    if k < 0:
        raise ValueError("k must be nonnegative")
    if p**k > bound:
        raise BoundError(f"p^k={p**k} exceeds the degree bound {bound}")
    return ClassDistribution(p, p**k, dict(_prime_power_vectors(p, k)))


def distribution(p: int, n: int, bound: int | None = None) -> ClassDistribution:
    """Distribution for P_n = prod_i P_{p^i}^{b_i} over the base-p digits b_i of n."""
    limit = max_degree() if bound is None else bound
    if n > limit:
        raise BoundError(f"n={n} exceeds the degree bound {limit}")
    digits = p_adic(n, p).digits
    acc: dict[Vector, int] = {(0,): 1}
    for i, b in enumerate(digits):
        if b:
            block = dict(_prime_power_vectors(p, i))
            acc = _convolve(acc, _power(block, b))
    length = len(digits)
    return ClassDistribution(p, n, {_pad(v, length): c for v, c in acc.items()})


def sylow_order(p: int, n: int) -> int:
    """|P_n| = p^(sum_i floor(n / p^i))."""
    require_odd_prime(p)
    if n < 0:
        raise ValueError("n must be nonnegative")
    e, q = 0, p
    while q <= n:
        e += n // q
        q *= p
    return p**e


def _block_generators(p: int, k: int, offset: int, n: int) -> list[tuple[int, ...]]:
    """Generators of P_{p^k} acting on points offset..offset+p^k-1 of range(n)."""
    if k == 0:
        return []
    size = p**k
    sub = p ** (k - 1)
    gens = _block_generators(p, k - 1, offset, n)
    # cyclic shift of the p sub-blocks; conjugates the first block's generators onto the rest
    perm = list(range(n))
    for i in range(size):
        perm[offset + i] = offset + (i + sub) % size
    gens.append(tuple(perm))
    return gens


def sylow_generators(p: int, n: int) -> list[tuple[int, ...]]:
    require_odd_prime(p)
    gens = []
    offset = 0
    for i, b in enumerate(p_adic(n, p).digits):
        for _ in range(b):
            gens.extend(_block_generators(p, i, offset, n))
            offset += p**i
    return gens


def _cycle_type(perm: tuple[int, ...]) -> Partition:
    seen = [False] * len(perm)
    lengths = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        lengths.append(length)
    return Partition(sorted(lengths, reverse=True))


def enumeration_oracle(p: int, n: int) -> ClassDistribution:
    """Tally cycle types over every element of an explicitly generated P_n."""
    order = sylow_order(p, n)
    if order > ORACLE_ORDER_BOUND:
        raise BoundError(f"|P_n|={order} exceeds the enumeration bound {ORACLE_ORDER_BOUND}")
    gens = sylow_generators(p, n)
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = tuple(s[x] for x in g)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
    if len(seen) != order:
        raise AssertionError(f"generated group has order {len(seen)}, expected {order}")
    tally = Counter(_cycle_type(g) for g in seen)
    vectors: dict[Vector, int] = {}
    length = len(p_adic(n, p).digits)
    for lam, c in tally.items():
        v = [0] * length
        for part in lam:
            i = 0
            while p**i < part:
                i += 1
            if p**i != part:
                raise AssertionError(f"cycle length {part} is not a power of {p}")
            v[i] += 1
        vectors[tuple(v)] = c
    return ClassDistribution(p, n, vectors)
