import pytest

from sylowchar.partitions import BoundError, enumerate_partitions
from sylowchar.sylow import (
    distribution,
    enumeration_oracle,
    prime_power_distribution,
    sylow_generators,
    sylow_order,
)

ONES = lambda n: (1,) * n  # noqa: E731


def test_prime_power_examples():
    assert prime_power_distribution(3, 1).counts == {(3,): 2, ONES(3): 1}
    assert prime_power_distribution(3, 2).counts == {
        (9,): 36,
        (3, 3, 3): 26,
        (3, 3) + ONES(3): 12,
        (3,) + ONES(6): 6,
        ONES(9): 1,
    }
    assert prime_power_distribution(5, 0).counts == {(1,): 1}


def test_distribution_examples():
    d9 = prime_power_distribution(3, 2).counts
    d10 = distribution(3, 10).counts
    assert d10 == {ct + (1,): c for ct, c in d9.items()}
    assert distribution(3, 4).counts == {(3, 1): 2, ONES(4): 1}


def test_two_five_cycles():
    # P_10 for p = 5 is C_5 x C_5 on two disjoint blocks: a generic element moves
    # exactly one block in 4 + 4 = 8 ways
    d = distribution(5, 10)
    assert d.counts == {(5, 5): 16, (5,) + ONES(5): 8, ONES(10): 1}
    assert d.total == 25


@pytest.mark.parametrize(
    "p, n, order", [(5, 25, 5**6), (3, 9, 81), (3, 27, 3**13), (3, 2, 1), (7, 49, 7**8)]
)
def test_sylow_order(p, n, order):
    assert sylow_order(p, n) == order


@pytest.mark.parametrize(
    "p, n",
    [(3, 3), (3, 4), (3, 6), (3, 9), (3, 10), (3, 12), (5, 5), (5, 10), (7, 7), (3, 18), (5, 25)],
)
def test_oracle_equivalence(p, n):
    assert distribution(p, n) == enumeration_oracle(p, n)


def test_oracle_small_examples():
    assert enumeration_oracle(3, 3).counts == {(3,): 2, ONES(3): 1}
    assert enumeration_oracle(5, 5).counts == {(5,): 4, ONES(5): 1}
    assert len(enumeration_oracle(3, 9)) == 5


def test_oracle_bound():
    with pytest.raises(BoundError):
        enumeration_oracle(3, 27)


def test_generators_are_permutations():
    for g in sylow_generators(3, 13):
        assert sorted(g) == list(range(13))


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_totals_keys_and_support(p):
    for n in range(1, 61):
        d = distribution(p, n)
        assert d.total == sylow_order(p, n)
        for ct, c in d.counts.items():
            assert c > 0 and sum(ct) == n
            for part in ct:
                while part % p == 0:
                    part //= p
                assert part == 1
        if n in (p, p * p, p**3):
            assert d[(n,)] > 0


def test_counts_are_reverse_lex_and_partitions():
    d = distribution(3, 27)
    keys = list(d.counts)
    assert keys == sorted(keys, reverse=True)
    assert len(d) == 23
    allowed = set(enumerate_partitions(27))
    assert all(k in allowed for k in keys)


def test_input_validation():
    with pytest.raises(ValueError):
        distribution(4, 8)
    with pytest.raises(ValueError):
        prime_power_distribution(2, 3)
    with pytest.raises(BoundError):
        distribution(3, 61)
    with pytest.raises(BoundError):
        prime_power_distribution(3, 6)
