import pytest
from hypothesis import given, strategies as st

from hilbcup.errors import Infeasible, WeightMismatch
from hilbcup.partitions import (
    associate,
    class_size,
    count_into_parts,
    degree,
    enumerate_partitions,
    from_multiplicities,
    is_associate_feasible,
    lex_compare,
    make_partition,
    multiplicities,
    partition_count,
    z_value,
)
from math import factorial

from oracles import partitions_by_multisets


def test_enumerate_small():
    assert enumerate_partitions(0) == [()]
    assert enumerate_partitions(3) == [(3,), (2, 1), (1, 1, 1)]
    assert len(enumerate_partitions(4)) == 5


@pytest.mark.parametrize("n", range(0, 13))
def test_enumerate_matches_multiset_oracle(n):
    ours = enumerate_partitions(n)
    assert len(set(ours)) == len(ours)
    assert set(ours) == set(partitions_by_multisets(n))


@pytest.mark.parametrize("n", range(1, 15))
def test_enumerate_is_sorted_by_lex_order(n):
    parts = enumerate_partitions(n)
    for a, b in zip(parts, parts[1:]):
        assert lex_compare(a, b) == -1
    assert parts[0] == (n,)
    assert parts[-1] == (1,) * n


def test_count_into_parts_examples():
    assert count_into_parts(4, 2) == 2
    assert count_into_parts(3, 0) == 0
    assert count_into_parts(0, 0) == 1
    for n in range(1, 10):
        assert count_into_parts(n, n) == 1


@pytest.mark.parametrize("n", range(0, 31))
def test_counts_sum_to_partition_number(n):
    total = sum(count_into_parts(n, k) for k in range(n + 1))
    assert total == len(enumerate_partitions(n)) == partition_count(n)


@pytest.mark.parametrize("n", range(1, 21))
def test_degree_slices_match_counts(n):
    parts = enumerate_partitions(n)
    for d in range(n):
        assert sum(1 for lam in parts if degree(lam) == d) == count_into_parts(n, n - d)


def test_degree_and_z():
    assert degree((1, 1, 1, 1)) == 0
    assert degree((2, 1)) == 1
    assert degree((3,)) == 2
    assert degree(()) == 0
    assert z_value(()) == 1
    assert z_value((5,)) == 5
    assert z_value((2, 1)) == 2 and class_size((2, 1)) == 3
    assert z_value((1, 1, 1)) == 6


@pytest.mark.parametrize("n", range(0, 13))
def test_class_equation(n):
    assert sum(class_size(lam) for lam in enumerate_partitions(n)) == factorial(n)


def test_associate_examples():
    assert associate((1,), 3) == (2, 1)
    assert associate((2,), 4) == (3, 1)
    with pytest.raises(Infeasible):
        associate((1, 1), 3)


@pytest.mark.parametrize("n", range(1, 13))
def test_associate_degree_and_injective(n):
    seen = {}
    for d in range(n):
        for lam in enumerate_partitions(d):
            if not is_associate_feasible(lam, n):
                with pytest.raises(Infeasible):
                    associate(lam, n)
                continue
            image = associate(lam, n)
            assert sum(image) == n
            assert degree(image) == d
            assert image not in seen
            seen[image] = lam


def test_associate_multiplicity_shift():
    lam = (3, 1, 1)
    image = associate(lam, 12)
    a, b = multiplicities(lam, 12), multiplicities(image, 12)
    assert b[0] == 12 - 5 - 3
    assert all(b[i] == a[i - 1] for i in range(1, 12))


def test_lex_compare():
    assert lex_compare((1, 1), (2,)) == 1
    assert lex_compare((2, 1), (3,)) == 1
    assert lex_compare((2, 2), (2, 2)) == 0
    with pytest.raises(WeightMismatch):
        lex_compare((2,), (1,))


@given(st.lists(st.integers(1, 6), max_size=8))
def test_canonical_form_roundtrip(parts):
    lam = make_partition(parts)
    assert list(lam) == sorted(parts, reverse=True)
    assert from_multiplicities(multiplicities(lam)) == lam
    alphas = multiplicities(lam)
    assert sum(i * a for i, a in enumerate(alphas, start=1)) == sum(lam)


def test_zero_part_rejected():
    with pytest.raises(ValueError):
        make_partition([2, 0])
