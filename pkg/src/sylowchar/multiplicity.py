"""Multiplicity of the trivial character in chi^lambda restricted to a Sylow p-subgroup.

    f(lambda) = (1/|P_n|) * sum over cycle types c of count_P(c) * chi^lambda(c)

together with the partition sets used to certify positivity (the Delta, A and
D sets) and drivers that compare computed data against the known zero sets.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import factorial
from typing import Iterable, Sequence

from .characters import degree, mn_character
from .lr import iterated_lr_multiplicity, lr_coefficient, lr_types
from .partitions import (
    BoundError,
    Partition,
    SkewShape,
    conjugate,
    contains,
    enumerate_partitions,
    hook,
    max_degree,
    require_odd_prime,
)
from .sylow import ClassDistribution, distribution, enumeration_oracle, sylow_order

__all__ = [
    "IntegrityError",
    "MultiplicityReport",
    "SetMembershipReport",
    "TheoremACheck",
    "TableRow",
    "f",
    "f_from_distribution",
    "multiplicity_report",
    "zero_set",
    "expected_zero_set",
    "in_delta",
    "delta",
    "in_A",
    "in_D",
    "verify_theorem_A",
    "verify_prime_power",
    "verify_D_equals_A",
    "constituent_count",
    "lemma_table_rows",
    "verify_lemma_tables",
    "D_SEARCH_BOUND",
]

D_SEARCH_BOUND = 60

# Exceptional zero sets for p = 3 and n <= 10, copied from the classification.
# These are expectations to compare against, never inputs to any computation.
P3_SMALL_EXCEPTIONS: dict[int, frozenset[Partition]] = {
    4: frozenset({Partition((2, 2))}),
    6: frozenset({Partition((3, 2, 1))}),
    9: frozenset(
        {
            Partition((5, 4)),
            Partition((2, 2, 2, 2, 1)),
            Partition((4, 3, 2)),
            Partition((3, 3, 2, 1)),
        }
    ),
    10: frozenset({Partition((5, 5)), Partition((2, 2, 2, 2, 2))}),
}


class IntegrityError(ArithmeticError):
    """An exact identity that must hold failed; this indicates a bug."""


def _prime_power_exponent(n: int, p: int) -> int | None:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k if n == 1 and k >= 1 else None


def f_from_distribution(lam: Iterable[int], dist: ClassDistribution) -> int:
    lam = Partition(lam)
    if lam.size != dist.degree:
        raise ValueError(f"size mismatch: |lambda|={lam.size}, n={dist.degree}")
    total = sum(c * mn_character(lam, ct) for ct, c in dist.counts.items())
    value, rem = divmod(total, dist.total)
    if rem:
        raise IntegrityError(
            f"character sum {total} for {lam!r} is not divisible by |P_n|={dist.total}"
        )
    if value < 0:
        raise IntegrityError(f"negative multiplicity {value} for {lam!r}")
    return value


def f(p: int, n: int, lam: Iterable[int]) -> int:
    """<chi^lambda restricted to P_n, trivial character>."""
    require_odd_prime(p)
    return f_from_distribution(lam, distribution(p, n))


def f_by_group_sum(p: int, n: int, lam: Iterable[int]) -> int:
    """f computed from an explicitly enumerated P_n (small groups only)."""
    return f_from_distribution(lam, enumeration_oracle(p, n))


@dataclass
class MultiplicityReport:
    prime: int
    degree: int
    entries: dict[Partition, int]
    zero_set: list[Partition]
    checks: dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "prime": self.prime,
            "degree": self.degree,
            "entries": [
                {"partition": list(lam), "multiplicity": m} for lam, m in self.entries.items()
            ],
            "zero_set": [list(lam) for lam in self.zero_set],
            "checks": {
                "degree_identity": self.checks.get("degree_identity", False),
                "conjugation_symmetry": self.checks.get("conjugation_symmetry", False),
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=False)


def _chunk_f(args):
    p, n, lams = args
    dist = distribution(p, n)
    return [f_from_distribution(lam, dist) for lam in lams]


def multiplicity_report(p: int, n: int, workers: int = 1) -> MultiplicityReport:
    """f(lambda) for every lambda of n, in reverse lexicographic order."""
    require_odd_prime(p)
    lams = enumerate_partitions(n)
    if workers > 1 and len(lams) > 200:
        size = -(-len(lams) // (4 * workers))
        chunks = [(p, n, lams[i : i + size]) for i in range(0, len(lams), size)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            values = [v for part in pool.map(_chunk_f, chunks) for v in part]
    else:
        values = _chunk_f((p, n, lams))
    entries = dict(zip(lams, values))
    zeros = [lam for lam, v in entries.items() if v == 0]
    index, rem = divmod(factorial(n), sylow_order(p, n))
    assert rem == 0
    checks = {
        "degree_identity": sum(v * degree(lam) for lam, v in entries.items()) == index,
        "conjugation_symmetry": all(entries[conjugate(lam)] == v for lam, v in entries.items()),
    }
    return MultiplicityReport(p, n, entries, zeros, checks)


def zero_set(p: int, n: int, workers: int = 1) -> list[Partition]:
    return multiplicity_report(p, n, workers).zero_set


def expected_zero_set(p: int, n: int) -> frozenset[Partition]:
    """Zero set predicted by the classification for odd p."""
    require_odd_prime(p)
    out = set()
    if _prime_power_exponent(n, p) is not None:
        out.add(hook(n - 2, 1))
        out.add(hook(1, n - 2))
    if p == 3:
        out |= P3_SMALL_EXCEPTIONS.get(n, frozenset())
    return frozenset(out)


@dataclass
class TheoremACheck:
    n: int
    expected: list[Partition]
    computed: list[Partition]

    @property
    def passed(self) -> bool:
        return set(self.expected) == set(self.computed)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "passed": self.passed,
            "expected": [list(x) for x in self.expected],
            "computed": [list(x) for x in self.computed],
        }


def _canonical(parts: Iterable[Partition]) -> list[Partition]:
    return sorted(parts, reverse=True)


def verify_theorem_A(p: int, n_max: int, workers: int = 1) -> list[TheoremACheck]:
    require_odd_prime(p)
    if n_max > max_degree():
        raise BoundError(f"n_max={n_max} exceeds the degree bound {max_degree()}")
    return [
        TheoremACheck(
            n, _canonical(expected_zero_set(p, n)), zero_set(p, n, workers)
        )
        for n in range(1, n_max + 1)
    ]


def verify_prime_power(p: int, k: int, workers: int = 1) -> TheoremACheck:
    require_odd_prime(p)
    if k < 1:
        raise ValueError("k must be at least 1")
    n = p**k
    return TheoremACheck(n, _canonical(expected_zero_set(p, n)), zero_set(p, n, workers))


def constituent_count(p: int, n: int, workers: int = 1) -> int:
    """Number of lambda of n with f(lambda) > 0."""
    report = multiplicity_report(p, n, workers)
    return sum(1 for v in report.entries.values() if v > 0)


# -- Delta / A / D ---------------------------------------------------------


def _check_size(lam: Partition, n: int) -> None:
    if lam.size != n:
        raise ValueError(f"size mismatch: |lambda|={lam.size}, expected {n}")


def in_delta(lam: Iterable[int], p: int, k: int) -> bool:
    """lambda of p^k other than the two hooks (p^k-1, 1) and (2, 1^(p^k-2))."""
    lam = Partition(lam)
    N = p**k
    _check_size(lam, N)
    return lam not in (hook(N - 2, 1), hook(1, N - 2))


def delta(p: int, k: int) -> list[Partition]:
    return [lam for lam in enumerate_partitions(p**k) if in_delta(lam, p, k)]


def _check_qp(q: int, p: int, k: int) -> None:
    require_odd_prime(p)
    if not 2 <= q <= p:
        raise ValueError(f"q must satisfy 2 <= q <= p, got q={q}, p={p}")
    if k < 1:
        raise ValueError(f"k must be at least 1, got {k}")


def a_exclusions(q: int, p: int, k: int) -> frozenset[Partition]:
    N = p**k
    m = q * N
    out = {Partition((m,)), hook(m - 2, 1), hook(1, m - 2), Partition((1,) * m)}
    if q == 2:
        out |= {Partition((N, N)), Partition((2,) * N)}
    return frozenset(out)


def in_A(q: int, p: int, k: int, lam: Iterable[int]) -> bool:
    _check_qp(q, p, k)
    lam = Partition(lam)
    _check_size(lam, q * p**k)
    return lam not in a_exclusions(q, p, k)


def _witness_order(p: int, k: int) -> list[Partition]:
    # row and column shapes peel off cheaply, so try them first
    N = p**k
    d = delta(p, k)
    first = [Partition((N,)), Partition((1,) * N)]
    return first + [x for x in d if x not in first]


def in_D(q: int, p: int, k: int, lam: Iterable[int]) -> tuple[bool, tuple[Partition, ...] | None]:
    """Search for mu_1..mu_q in Delta(p^k), not all equal, with the product in the restriction.

    Multisets are visited in nondecreasing index order of the witness list.  A
    factor mu is peeled off with the symmetry c^shape_{mu,nu} = c^shape_{nu,mu}:
    the admissible remainders nu are exactly the LR types of ``shape / mu``.
    Any witness found is re-certified by ``iterated_lr_multiplicity``.
    """
    _check_qp(q, p, k)
    lam = Partition(lam)
    _check_size(lam, q * p**k)
    if lam.size > D_SEARCH_BOUND:
        raise BoundError(f"q*p^k={lam.size} exceeds the D-search bound {D_SEARCH_BOUND}")
    cands = [mu for mu in _witness_order(p, k) if contains(lam, mu)]
    index = {mu: i for i, mu in enumerate(cands)}
    mixed = -1
    memo: dict = {}

    def search(shape: Partition, r: int, start: int, common: int | None):
        if r == 1:
            i = index.get(shape)
            if i is None or i < start or common == i:
                return None
            return (shape,)
        key = (shape, r, start, common)
        if key in memo:
            return memo[key]
        found = None
        for i in range(start, len(cands)):
            mu = cands[i]
            if not contains(shape, mu):
                continue
            nxt = i if common is None else (common if common == i else mixed)
            for nu in sorted(lr_types(SkewShape(shape, mu), bound=D_SEARCH_BOUND), reverse=True):
                rest = search(nu, r - 1, i, nxt)
                if rest is not None:
                    found = (mu,) + rest
                    break
            if found is not None:
                break
        memo[key] = found
        return found

    witness = search(lam, q, 0, None)
    if witness is None:
        return False, None
    if not iterated_lr_multiplicity(lam, witness, positive_only=True):
        raise IntegrityError(f"witness {witness} for {lam!r} fails the LR certificate")
    return True, witness


@dataclass
class SetMembershipReport:
    q: int
    p: int
    k: int
    a_set: list[Partition]
    d_set: list[Partition]
    witnesses: dict[Partition, tuple[Partition, ...]]
    scanned: int

    @property
    def only_in_A(self) -> list[Partition]:
        d = set(self.d_set)
        return [x for x in self.a_set if x not in d]

    @property
    def only_in_D(self) -> list[Partition]:
        a = set(self.a_set)
        return [x for x in self.d_set if x not in a]

    @property
    def equal(self) -> bool:
        return not self.only_in_A and not self.only_in_D

    def to_dict(self) -> dict:
        return {
            "q": self.q,
            "p": self.p,
            "k": self.k,
            "scanned": self.scanned,
            "a_size": len(self.a_set),
            "d_size": len(self.d_set),
            "equal": self.equal,
            "only_in_A": [list(x) for x in self.only_in_A],
            "only_in_D": [list(x) for x in self.only_in_D],
            "witnesses": [
                {"partition": list(lam), "witness": [list(m) for m in w]}
                for lam, w in self.witnesses.items()
            ],
        }


def verify_D_equals_A(q: int, p: int, k: int) -> SetMembershipReport:
    """Scan every lambda of q*p^k and compare membership in A and D."""
    _check_qp(q, p, k)
    n = q * p**k
    if n > D_SEARCH_BOUND:
        raise BoundError(f"q*p^k={n} exceeds the D-search bound {D_SEARCH_BOUND}")
    a_set, d_set, witnesses = [], [], {}
    scanned = 0
    for lam in enumerate_partitions(n):
        scanned += 1
        if in_A(q, p, k, lam):
            a_set.append(lam)
        ok, w = in_D(q, p, k, lam)
        if ok:
            d_set.append(lam)
            witnesses[lam] = w
    return SetMembershipReport(q, p, k, a_set, d_set, witnesses, scanned)


# -- explicit witness tables -------------------------------------------------


@dataclass
class TableRow:
    source: str
    partition: Partition
    witness: tuple[Partition, ...] | None  # None: membership settled by search
    coefficient: int = 0
    found: tuple[Partition, ...] | None = None
    distinct: bool = False
    in_delta: bool = False

    @property
    def passed(self) -> bool:
        return self.distinct and self.in_delta and self.coefficient >= 1

    def to_dict(self) -> dict:
        w = self.witness if self.witness is not None else self.found
        return {
            "source": self.source,
            "partition": list(self.partition),
            "witness": None if w is None else [list(x) for x in w],
            "searched": self.witness is None,
            "coefficient": self.coefficient,
            "passed": self.passed,
        }


def _P(*blocks: tuple[int, int]) -> Partition:
    """Partition from (part, multiplicity) blocks, e.g. _P((5,1),(2,3))."""
    parts: list[int] = []
    for value, mult in blocks:
        if mult < 0:
            raise ValueError("negative multiplicity in a parameterised shape")
        parts.extend([value] * mult)
    return Partition(parts)


def lemma_table_rows(N: int) -> list[tuple[str, Partition, tuple[Partition, ...] | None]]:
    """The witness tables for q = 2 instantiated at N = p^k (needs N >= 7)."""
    if N < 7:
        raise ValueError(f"table shapes need N >= 7, got N={N}")
    a = _P((3, 1), (2, 1), (1, N - 5))  # (3,2,1^{N-5})
    b = _P((4, 1), (1, N - 4))  # (4,1^{N-4})
    c = _P((3, 1), (1, N - 3))  # (3,1^{N-3})
    d = _P((2, 2), (1, N - 4))  # (2^2,1^{N-4})
    e = _P((4, 1), (2, 1), (1, N - 6))  # (4,2,1^{N-6})
    g = _P((3, 1), (2, 2), (1, N - 7))  # (3,2,2,1^{N-7})
    h = _P((2, 3), (1, N - 6))  # (2^3,1^{N-6})
    omega_hook = "omega=(3,1^{N-3})"
    omega_22 = "omega=(2^2,1^{N-4})"
    rows = [
        (omega_hook, _P((5, 1), (3, 1), (2, N - 4)), (a, b)),
        (omega_hook, _P((6, 1), (2, N - 3)), (a, b)),
        (omega_hook, _P((6, 1), (2, N - 4), (1, 2)), (b, c)),
        (omega_hook, _P((5, 1), (3, 1), (2, N - 5), (1, 2)), (a, c)),
        (omega_hook, _P((5, 1), (2, N - 3), (1, 1)), (a, c)),
        (omega_22, _P((3, 2), (2, N - 3)), (d, a)),
        (omega_22, _P((5, 1), (3, 1), (2, N - 4)), (d, a)),
        (omega_22, _P((4, 2), (2, N - 4)), (a, e)),
        (omega_22, _P((4, 1), (3, 2), (2, N - 5)), (a, e)),
        (omega_22, _P((3, 4), (2, N - 6)), (a, g)),
        (omega_22, _P((5, 1), (3, 1), (2, N - 5), (1, 2)), (a, c)),
        (omega_22, _P((4, 2), (2, N - 5), (1, 2)), (a, c)),
        (omega_22, _P((4, 1), (3, 2), (2, N - 6), (1, 2)), (a, c)),
        (omega_22, _P((4, 1), (3, 1), (2, N - 4), (1, 1)), (a, c)),
        (omega_22, _P((3, 3), (2, N - 5), (1, 1)), (a, c)),
        (omega_22, _P((3, 4), (2, N - 7), (1, 2)), (a, h)),
        ("mu=(2,1^{N-2})", _P((2, N - 1), (1, 2)), (d, h)),
        ("mu=(2,1^{N-2})", _P((3, 1), (2, N - 2), (1, 1)), (c, d)),
        ("mu=(N-1,1)", _P((N - 1, 1), (1, N + 1)), (_P((N - 2, 1), (1, 2)), _P((1, N)))),
        ("mu=(N-1,1)", _P((N - 1, 1), (2, 1), (1, N - 1)), (_P((N - 2, 1), (2, 1)), _P((1, N)))),
        ("mu=(N-1,1)", _P((N, 1), (2, 1), (1, N - 2)), (_P((N - 2, 1), (2, 1)), c)),
        ("omega=(2,1^{N-2})", _P((3, 2), (2, N - 3)), None),
        ("omega=(2,1^{N-2})", _P((4, 1), (2, N - 2)), None),
    ]
    return rows


def verify_lemma_tables(p: int, k: int) -> list[TableRow]:
    """Check every table row: distinct witnesses in Delta(p^k) with c^lambda >= 1."""
    require_odd_prime(p)
    N = p**k
    if 2 * N > D_SEARCH_BOUND:
        raise BoundError(f"2*p^k={2 * N} exceeds the table bound {D_SEARCH_BOUND}")
    out = []
    for source, lam, witness in lemma_table_rows(N):
        row = TableRow(source, lam, witness)
        if witness is None:
            ok, found = in_D(2, p, k, lam)
            row.found = found
            pair: Sequence[Partition] | None = found if ok else None
        else:
            pair = witness
        if pair is not None:
            gamma, delta_ = pair
            row.distinct = gamma != delta_
            row.in_delta = in_delta(gamma, p, k) and in_delta(delta_, p, k)
            row.coefficient = lr_coefficient(lam, gamma, delta_)
        out.append(row)
    return out
