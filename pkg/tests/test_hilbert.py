from fractions import Fraction as F

import pytest

from hilbcup import classalg as ca
from hilbcup import hilbert as hb
from hilbcup.classalg import ClassFunction
from hilbcup.errors import Infeasible
from hilbcup.partitions import (
    associate,
    count_into_parts,
    enumerate_partitions,
    lex_compare,
    partition_count,
    relation_weight,
    succ_compare,
)
from hilbcup.symfun import PPoly, phi
from hilbcup.verify import triangularity_violations

chi = ClassFunction.basis


def mono(*parts, c=1):
    return PPoly.monomial(parts, c)


def test_bases_examples():
    assert hb.basis_p((1, 1), 4) == mono(2, 2, c=F(1, 8))
    assert hb.basis_gamma((1, 1), 4) == mono(3, 1) + mono(2, 2, c=F(1, 4))
    assert hb.epsilon_monomial((1, 1), 4) == ClassFunction(4, {(3, 1): 3, (2, 2): 2})
    assert hb.basis_ch((2,), 4) == mono(3, 1, c=F(1, 6))
    with pytest.raises(Infeasible):
        hb.basis_p((1, 1), 3)


def test_matrix_examples():
    a = hb.matrix_A(2, 4)
    assert a.index == [(1, 1), (2,)]
    assert a.rows() == [[1, F(1, 2)], [0, -1]]
    assert a.abs_determinant() == 1
    b = hb.matrix_B(2, 4)
    assert b.diagonal() == {(1, 1): 2, (2,): F(1, 2)}
    assert b.entries[((2,), (1, 1))] == 3
    assert b.abs_determinant() == 1
    assert hb.matrix_A(3).abs_determinant() == F(1, 2) == hb.matrix_B(3).abs_determinant()


def test_determinant_formulas():
    assert hb.det_A_formula(2) == 1 and hb.det_B_formula(2) == 1
    assert hb.det_A_formula(3) == F(1, 2) and hb.det_B_formula(3) == F(1, 2)


@pytest.mark.parametrize("d", range(1, 6))
def test_matrices_triangular_with_stated_diagonal(d):
    n = 2 * d
    a, b = hb.matrix_A(d, n), hb.matrix_B(d, n)
    assert triangularity_violations(a, lex_compare) == []
    assert triangularity_violations(b, lambda mu, lam: succ_compare(mu, lam, n)) == []
    for lam in a.index:
        assert a.entries[(lam, lam)] == hb.diag_A_formula(lam)
        assert abs(b.entries[(lam, lam)]) == abs(hb.diag_B_formula(lam))
    assert a.abs_determinant() == hb.det_A_formula(d)
    assert b.abs_determinant() == hb.det_B_formula(d)
    assert a.abs_determinant() == b.abs_determinant()


@pytest.mark.parametrize("d", range(1, 8))
def test_det_ratio_identity(d):
    # prod over lam |- d of prod_i i^alpha_i / alpha_i! equals 1
    assert hb.det_A_formula(d) / hb.det_B_formula(d) == 1


@pytest.mark.parametrize("d", range(1, 4))
def test_matrices_above_stable_weight(d):
    for n in range(2 * d, 2 * d + 3):
        assert hb.matrix_A(d, n).abs_determinant() == hb.det_A_formula(d)
        assert hb.matrix_B(d, n).abs_determinant() == hb.det_B_formula(d)


def test_relation_examples():
    assert hb.relation_poly((1,)) == hb.ChernPoly({(1,): -1})
    assert hb.relation_poly((1, 1)) == hb.ChernPoly({(2,): 3, (1, 1): -1})
    assert hb.relation_poly((2,)) == hb.ChernPoly({(1, 1): 1, (2,): -2})
    # 3 eps(2) - tau^2 = chi(2,2) and tau^2 - 2 eps(2) = chi(3,1) in S_4
    t2 = ca.cup(ca.tau(4), ca.tau(4))
    e2 = ca.epsilon_component(4, 2)
    assert 3 * e2 - t2 == chi((2, 2))
    assert t2 - 2 * e2 == chi((3, 1))


@pytest.mark.parametrize("d", range(1, 5))
def test_relations_stable(d):
    for lam in enumerate_partitions(d):
        base = hb.relation_poly(lam)
        assert base.is_integral()
        assert base.weighted_degrees() <= {d}
        for n in range(2 * d + 1, 2 * d + 4):
            assert hb.relation_poly(lam, n) == base


@pytest.mark.parametrize("n", range(1, 8))
def test_relation_soundness(n):
    for d in range(1, 6):
        for lam in enumerate_partitions(d):
            value = hb.relation_poly(lam).evaluate(n)
            if relation_weight(lam) > n:
                assert not value
            else:
                assert value == chi(associate(lam, n))


def test_presentation_n3():
    pres = hb.presentation(3, 2)
    assert pres.generators == ["c1", "c2"]
    lams = [r.lam for r in pres.relations]
    assert (1, 1) in lams and (2,) not in lams
    rel = {r.lam: r.poly for r in pres.relations}
    assert rel[(1, 1)] == hb.ChernPoly({(2,): 3, (1, 1): -1})
    assert pres.betti == [1, 1, 1]
    assert pres.verified
    assert hb.relation_poly((2,)).evaluate(3) == chi((3,))


def test_presentation_relation_2m():
    # r_(2^m) with m = ceil((n+1)/2) is a relation
    for n in range(1, 6):
        m = -(-(n + 1) // 2)
        pres = hb.presentation(n, 2 * m)
        assert (2,) * m in [r.lam for r in pres.relations]
        assert pres.verified


def test_betti():
    assert hb.betti(1) == [1]
    assert hb.betti(4) == [1, 1, 2, 1]
    for n in range(1, 13):
        b = hb.betti(n)
        assert sum(b) == partition_count(n)
        assert b == [hb.slice_dimension(n, i) for i in range(n)]


def test_graded_rank_examples():
    rows = hb.graded_rank_check(3)
    assert rows[2].rank == 1 and rows[2].expected == count_into_parts(3, 1)
    assert hb.epsilon_monomial((1, 1), 3) == ClassFunction(3, {(3,): 3})
    assert hb.epsilon_monomial((2,), 3) == chi((3,))
    assert hb.graded_rank_check(4)[2].rank == 2
    for n in range(0, 6):
        row0 = hb.graded_rank_check(n, 0)[0]
        assert row0.rank == 1 and row0.divisors == [1]


@pytest.mark.parametrize("n", range(1, 8))
def test_epsilon_generates_over_z(n):
    for row in hb.graded_rank_check(n):
        assert row.ok, row


def test_chernpoly_evaluate_beyond_range():
    # c_3 vanishes in C(S_3)
    assert not hb.ChernPoly({(3,): 1}).evaluate(3)


def test_phi_of_gamma_is_chern_operator_image():
    from hilbcup.symfun import chern_operator, p1_power

    q = p1_power(6)
    assert hb.basis_gamma((2, 1), 6) == chern_operator(2, 6, chern_operator(1, 6, q))
    assert phi(ca.unit(6)) == q
