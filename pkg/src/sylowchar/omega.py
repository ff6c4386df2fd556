"""The part-shrinking operator Omega_q : P(qn) -> P((q-1)n).

Parts of lambda not divisible by q are written ``k*q + x`` with residue
``1 <= x < q``; divisible parts are ``r*q``.  The residues sum to
``zeta*q``.  Non-divisible parts are ranked by residue (ties: later index
ranks higher); the ``zeta`` highest-ranked lose ``k + 1`` cells, the others
lose ``k``, and each ``r*q`` becomes ``r*(q-1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .partitions import Partition

__all__ = ["ResidueDecomposition", "residue_decompose", "succ_order", "omega"]


@dataclass(frozen=True)
class ResidueDecomposition:
    q: int
    mu_parts: tuple[tuple[int, int], ...]  # (k_i, x_i), parts k*q + x in weakly decreasing order
    nu_parts: tuple[int, ...]  # r_j, parts r*q in weakly decreasing order
    zeta: int

    @property
    def residues(self) -> tuple[int, ...]:
        return tuple(x for _, x in self.mu_parts)

    def reassemble(self) -> Partition:
        parts = [k * self.q + x for k, x in self.mu_parts] + [r * self.q for r in self.nu_parts]
        return Partition(sorted(parts, reverse=True))


def _check_q(lam: Sequence[int], q: int) -> None:
    if not isinstance(q, int) or q < 2:
        raise ValueError(f"q must be an integer >= 2, got {q!r}")
    if sum(lam) % q:
        raise ValueError(f"q={q} does not divide |lambda|={sum(lam)}")


def residue_decompose(lam: Iterable[int], q: int) -> ResidueDecomposition:
    lam = Partition(lam)
    _check_q(lam, q)
    mu = tuple(divmod(x, q) for x in lam if x % q)
    nu = tuple(x // q for x in lam if x % q == 0)
    total = sum(x for _, x in mu)
    assert total % q == 0
    return ResidueDecomposition(q, mu, nu, total // q)


def succ_order(decomp: ResidueDecomposition) -> list[int]:
    """Indices (0-based) of ``mu_parts`` from highest to lowest rank."""
    return sorted(
        range(len(decomp.mu_parts)),
        key=lambda i: (decomp.mu_parts[i][1], i),
        reverse=True,
    )


def _shrink(mu_parts: Sequence[tuple[int, int]], nu_parts: Sequence[int], q: int, zeta: int):
    decomp = ResidueDecomposition(q, tuple(mu_parts), tuple(nu_parts), zeta)
    out = []
    for rank, i in enumerate(succ_order(decomp)):
        k, x = mu_parts[i]
        out.append(k * q + x - (k + 1 if rank < zeta else k))
    out.extend(r * (q - 1) for r in nu_parts)
    return Partition(sorted((v for v in out if v), reverse=True))


def omega(lam: Iterable[int], q: int) -> Partition:
    """Omega_q(lambda), a partition of (q-1)|lambda|/q."""
    d = residue_decompose(lam, q)
    return _shrink(d.mu_parts, d.nu_parts, q, d.zeta)
