from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st
from sympy.matrices.normalforms import smith_normal_form

from hilbcup import linalg


def int_matrices(max_rows=5, max_cols=5, lo=-6, hi=6):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(lo, hi), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    )


def square(max_n=5):
    return st.integers(1, max_n).flatmap(
        lambda n: st.lists(st.lists(st.integers(-7, 7), min_size=n, max_size=n), min_size=n, max_size=n)
    )


@settings(max_examples=150, deadline=None)
@given(square())
def test_determinant_matches_sympy(m):
    assert linalg.bareiss_det(m) == sympy.Matrix(m).det()
    assert linalg.determinant(m) == sympy.Matrix(m).det()


@settings(max_examples=100, deadline=None)
@given(square(4), st.integers(1, 5))
def test_rational_determinant(m, den):
    scaled = [[Fraction(x, den) for x in row] for row in m]
    assert linalg.determinant(scaled) == Fraction(int(sympy.Matrix(m).det())) / den ** len(m)


@settings(max_examples=150, deadline=None)
@given(int_matrices())
def test_rank_matches_sympy(m):
    assert linalg.rank(m) == sympy.Matrix(m).rank()


@settings(max_examples=150, deadline=None)
@given(int_matrices(lo=-9, hi=9))
def test_elementary_divisors_match_sympy(m):
    snf = smith_normal_form(sympy.Matrix(m), domain=sympy.ZZ)
    expected = sorted(abs(int(snf[i, i])) for i in range(min(snf.shape)) if snf[i, i] != 0)
    ours = linalg.elementary_divisors(m)
    assert sorted(ours) == expected
    for a, b in zip(ours, ours[1:]):
        assert b % a == 0


@settings(max_examples=80, deadline=None)
@given(square(4), st.lists(st.integers(-5, 5), min_size=4, max_size=4))
def test_solve(m, x):
    n = len(m)
    if sympy.Matrix(m).det() == 0:
        return
    x = x[:n]
    rhs = [[sum(m[i][j] * x[j] for j in range(n))] for i in range(n)]
    assert [row[0] for row in linalg.solve(m, rhs)] == x


def test_small_cases():
    assert linalg.determinant([]) == 1
    assert linalg.rank([[0, 0], [0, 0]]) == 0
    assert linalg.elementary_divisors([[2, 4], [6, 8]]) == [2, 4]
    assert linalg.elementary_divisors([[0, 0]]) == []
