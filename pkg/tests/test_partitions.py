import pytest
from hypothesis import given, strategies as st

from oracles import count_partitions, partitions_desc
from sylowchar.partitions import (
    BoundError,
    Partition,
    SkewShape,
    conjugate,
    contains,
    enumerate_partitions,
    format_partition,
    hook,
    iter_partitions,
    p_adic,
    parse_partition,
    partition_count,
)

partitions = st.integers(0, 30).flatmap(lambda n: st.sampled_from(list(partitions_desc(n))))


@pytest.mark.parametrize(
    "lam, expected",
    [((5, 4), (2, 2, 2, 2, 1)), ((3, 2, 1), (3, 2, 1)), ((9,), (1,) * 9), ((), ())],
)
def test_conjugate_examples(lam, expected):
    assert conjugate(lam) == expected
    assert Partition(lam).conjugate() == expected


def test_conjugate_is_an_involution_up_to_20():
    for n in range(21):
        for lam in iter_partitions(n):
            lam_c = conjugate(lam)
            assert sum(lam_c) == n
            assert conjugate(lam_c) == lam


def test_contains_examples():
    assert contains((5, 4), (2, 2))
    assert not contains((2, 2), (3,))
    assert contains((3, 1), ())
    assert not contains((), (1,))


@given(partitions, partitions)
def test_contains_antisymmetric(lam, mu):
    if contains(lam, mu) and contains(mu, lam):
        assert lam == mu


def test_enumeration_order_and_edge_cases():
    assert enumerate_partitions(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert enumerate_partitions(0) == [()]
    assert len(enumerate_partitions(9)) == 30


def test_enumeration_matches_reference_generator():
    for n in range(16):
        assert enumerate_partitions(n) == list(partitions_desc(n))


def test_counts_against_independent_recurrence():
    for n in range(41):
        assert partition_count(n) == count_partitions(n)
        assert sum(1 for _ in iter_partitions(n)) == count_partitions(n)


def test_enumeration_bound():
    with pytest.raises(BoundError):
        enumerate_partitions(61)
    assert len(enumerate_partitions(5, bound=5)) == 7
    with pytest.raises(BoundError):
        enumerate_partitions(6, bound=5)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))
    with pytest.raises(ValueError):
        Partition((2**32 + 1,))
    lam = Partition((3, 3, 1))
    assert lam.size == 7 and lam.length == 3
    assert lam.part(0) == 3 and lam.part(5) == 0
    assert lam.multiplicities() == {3: 2, 1: 1}
    assert hook(3, 2) == (4, 1, 1) and hook(3, 2).is_hook()
    assert not lam.is_hook()


@pytest.mark.parametrize(
    "n, p, digits, total",
    [(10, 3, (1, 0, 1), 2), (48, 3, (0, 1, 2, 1), 4), (25, 5, (0, 0, 1), 1)],
)
def test_p_adic_examples(n, p, digits, total):
    e = p_adic(n, p)
    assert e.digits == digits and e.digit_sum == total and e.value == n


@pytest.mark.slow
def test_p_adic_reconstructs_every_n_up_to_a_million():
    for p in (3, 5, 7):
        for n in range(1, 10**6 + 1):
            assert p_adic(n, p).value == n


@pytest.mark.parametrize("p", [2, 4, 9, 1, -3])
def test_p_adic_rejects_non_odd_primes(p):
    with pytest.raises(ValueError):
        p_adic(10, p)


def test_parse_examples():
    assert parse_partition("2^4,1") == (2, 2, 2, 2, 1)
    assert parse_partition("5,4") == (5, 4)
    assert parse_partition("") == () == parse_partition("()")
    assert parse_partition(" (3, 1^2) ") == (3, 1, 1)


@pytest.mark.parametrize("text", ["1,2", "a", "3,,1", "0", "2^-1", "3;1"])
def test_parse_errors(text):
    with pytest.raises(ValueError):
        parse_partition(text)


@given(partitions, st.booleans())
def test_format_parse_round_trip(lam, compact):
    assert parse_partition(format_partition(lam, compact=compact)) == lam


def test_format_compact():
    assert format_partition((2, 2, 2, 2, 1), compact=True) == "2^4,1"
    assert format_partition((5, 4)) == "5,4"


def test_skew_shape_geometry():
    g = SkewShape((2, 2), (1,))
    assert g.size == 3
    assert g.rows() == [(1, 2), (0, 2)]
    # the three cells rotated by 180 degrees form the diagram of (2,1)
    assert g.rotated_cells() == frozenset({(0, 0), (0, 1), (1, 0)})
    with pytest.raises(ValueError):
        SkewShape((2,), (3,))
