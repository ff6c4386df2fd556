"""Exact trivial-character multiplicities of S_n irreducibles on Sylow p-subgroups."""

__version__ = "0.1.0"

from .characters import degree, mn_character
from .lr import iterated_lr_multiplicity, lr_coefficient, lr_types, restriction_oracle
from .multiplicity import (
    constituent_count,
    f,
    in_A,
    in_D,
    in_delta,
    multiplicity_report,
    verify_D_equals_A,
    verify_lemma_tables,
    verify_theorem_A,
)
from .omega import omega, residue_decompose
from .partitions import (
    Partition,
    SkewShape,
    conjugate,
    contains,
    enumerate_partitions,
    p_adic,
    parse_partition,
    format_partition,
)
from .sylow import distribution, enumeration_oracle, prime_power_distribution, sylow_order


def clear_caches() -> None:
    """Drop every memo table (characters, LR data, Sylow distributions)."""
    from . import characters, lr, sylow

    characters.cache_clear()
    lr._lr_count.cache_clear()
    lr._lr_exists.cache_clear()
    lr._lr_types.cache_clear()
    sylow._prime_power_vectors.cache_clear()


__all__ = [
    "clear_caches",
    "Partition",
    "SkewShape",
    "conjugate",
    "contains",
    "enumerate_partitions",
    "p_adic",
    "parse_partition",
    "format_partition",
    "mn_character",
    "degree",
    "lr_coefficient",
    "lr_types",
    "iterated_lr_multiplicity",
    "restriction_oracle",
    "omega",
    "residue_decompose",
    "distribution",
    "prime_power_distribution",
    "enumeration_oracle",
    "sylow_order",
    "f",
    "multiplicity_report",
    "in_delta",
    "in_A",
    "in_D",
    "verify_theorem_A",
    "verify_D_equals_A",
    "verify_lemma_tables",
    "constituent_count",
]
