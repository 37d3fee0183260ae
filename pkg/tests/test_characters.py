from fractions import Fraction

import pytest

from hilbcup import characters
from hilbcup.characters import mn_character, table
from hilbcup.errors import BoundExceeded, WeightMismatch
from hilbcup.partitions import degree, enumerate_partitions, z_value

from oracles import hook_dimension, s3_standard_character


def test_trivial_and_sign():
    for n in range(1, 8):
        for mu in enumerate_partitions(n):
            assert mn_character((n,), mu) == 1
            assert mn_character((1,) * n, mu) == (-1) ** degree(mu)
    assert mn_character((1, 1, 1), (2, 1)) == -1


def test_s3_standard_representation():
    chi = s3_standard_character()
    assert chi == {(1, 1, 1): 2, (2, 1): 0, (3,): -1}
    for mu, v in chi.items():
        assert mn_character((2, 1), mu) == v


def test_table_small():
    t1 = table(1)
    assert t1.entries == {((1,), (1,)): 1}
    t3 = table(3)
    assert [t3(lam, (1, 1, 1)) for lam in t3.partitions] == [1, 2, 1]
    assert sum(table(5).dimension(lam) ** 2 for lam in table(5).partitions) == 120


@pytest.mark.parametrize("n", range(1, 11))
def test_dimensions_match_hook_formula(n):
    t = table(n)
    for lam in t.partitions:
        assert t.dimension(lam) == hook_dimension(lam)


@pytest.mark.parametrize("n", range(1, 11))
def test_orthogonality(n):
    t = table(n)
    parts = t.partitions
    for lam in parts:
        for kap in parts:
            s = sum(Fraction(t(lam, mu) * t(kap, mu), z_value(mu)) for mu in parts)
            assert s == (1 if lam == kap else 0)
    for mu in parts:
        for nu in parts:
            s = sum(t(lam, mu) * t(lam, nu) for lam in parts)
            assert s == (z_value(mu) if mu == nu else 0)


def test_weight_mismatch():
    with pytest.raises(WeightMismatch):
        mn_character((2,), (1,))


def test_bound(monkeypatch):
    monkeypatch.setenv("HILBCUP_MAX_N", "4")
    with pytest.raises(BoundExceeded):
        table(5)
    assert table(4).n == 4


def test_table_cached(monkeypatch):
    monkeypatch.delenv("HILBCUP_MAX_N", raising=False)
    assert characters.max_table_n() == 14
    assert table(6) is table(6)
