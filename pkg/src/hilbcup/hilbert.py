"""Generators and relations for H*(Hilb^n(A^2); Z) realized on class functions.

Three bases of the degree-d part of P_n (for n >= 2d) are compared:

* ``basis_p``     -- monomials Phi(chi_{lam'}) for the associated partition,
* ``basis_gamma`` -- Phi of cup monomials in the components of epsilon_n,
* ``basis_ch``    -- products of the operators D_i applied to p_1^n/n!.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Dict, List, Tuple

from . import linalg
from .classalg import ClassFunction, cup, epsilon, slice_basis, unit
from .errors import NonIntegerCoefficient, SingularBasis
from .partitions import (
    Partition,
    associate,
    count_into_parts,
    degree,
    enumerate_partitions,
    make_partition,
    multiplicities,
    relation_weight,
)
from .symfun import PPoly, d_component, p1_power, phi


# ---------------------------------------------------------------------------
# Chern polynomials


class ChernPoly:
    """Polynomial in c_1, c_2, ...; a monomial ``prod c_i^{e_i}`` is keyed by the
    partition with e_i parts equal to i."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Partition, object] | None = None):
        clean = {}
        for mono, c in (terms or {}).items():
            mono = make_partition(mono)
            c = clean.get(mono, 0) + c
            if isinstance(c, Fraction) and c.denominator == 1:
                c = c.numerator
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = clean

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> Dict[Partition, object]:
        return dict(self._terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ChernPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def weighted_degrees(self) -> set[int]:
        return {sum(m) for m in self._terms}

    def sorted_items(self):
        order = {}
        for mono in self._terms:
            order[mono] = (sum(mono), multiplicities(mono, sum(mono)))
        return sorted(self._terms.items(), key=lambda kv: order[kv[0]])

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for mono, c in self.sorted_items():
            factors = "*".join(
                f"c{i}^{e}" if e > 1 else f"c{i}" for i, e in sorted(Counter(mono).items())
            )
            out.append(f"{c}*{factors}" if factors else str(c))
        return " + ".join(out)

    def evaluate(self, n: int, engine: str = "auto") -> ClassFunction:
        """Substitute ``c_i -> epsilon_n(i)`` with cup products in C(S_n)."""
        total = ClassFunction.zero(n)
        for mono, c in self._terms.items():
            total = total + epsilon_monomial(mono, n, engine).scale(c)
        return total


def _epsilon_slice(n: int, i: int) -> ClassFunction:
    # c_i for i >= n evaluates to zero: epsilon_n has no component there
    return epsilon(n).degree_component(i)


@lru_cache(maxsize=None)
def _epsilon_monomial(mono: Partition, n: int, engine: str) -> ClassFunction:
    if not mono:
        return unit(n)
    rest = _epsilon_monomial(mono[1:], n, engine)
    if not rest:
        return rest
    return cup(_epsilon_slice(n, mono[0]), rest, engine)


def epsilon_monomial(mono: Partition, n: int, engine: str = "auto") -> ClassFunction:
    """``prod_i epsilon_n(i)^{alpha_i}`` under the cup product."""
    return _epsilon_monomial(make_partition(mono), n, engine)


# ---------------------------------------------------------------------------
# the three bases


def basis_p(lam: Partition, n: int) -> PPoly:
    return phi(ClassFunction.basis(associate(lam, n)))


def basis_gamma(lam: Partition, n: int, engine: str = "auto") -> PPoly:
    return phi(epsilon_monomial(lam, n, engine))


@lru_cache(maxsize=None)
def basis_ch(lam: Partition, n: int) -> PPoly:
    """``prod_i D_i^{alpha_i} (p_1^n / n!)``."""
    q = p1_power(n)
    for i in lam:
        q = d_component(i, q)
    return q


# ---------------------------------------------------------------------------
# change of basis matrices


def ordered_descending(d: int) -> List[Partition]:
    """Partitions of d in descending ``<`` order: ``(1^d)`` first, ``(d)`` last."""
    return list(reversed(enumerate_partitions(d)))


@dataclass
class BasisMatrix:
    """Change-of-basis matrix; ``entries[(mu, lam)]`` is the coefficient of the
    target basis element mu in ``ch^lam``."""

    name: str
    d: int
    n: int
    index: List[Partition]
    entries: Dict[Tuple[Partition, Partition], Fraction] = field(default_factory=dict)

    def rows(self) -> List[List[Fraction]]:
        return [[self.entries[(mu, lam)] for lam in self.index] for mu in self.index]

    def diagonal(self) -> Dict[Partition, Fraction]:
        return {lam: self.entries[(lam, lam)] for lam in self.index}

    def exact_determinant(self) -> Fraction:
        return linalg.determinant(self.rows())

    def abs_determinant(self) -> Fraction:
        return abs(self.exact_determinant())


def _coords(q: PPoly, monomials: List[Partition]) -> List[Fraction]:
    extra = set(m for m, _ in q.items()) - set(monomials)
    if extra:
        raise SingularBasis(f"element leaves the expected slice: {sorted(extra)}")
    return [q.coeff(m) for m in monomials]


def _solve_in_basis(targets: Dict[Partition, PPoly], basis: Dict[Partition, PPoly],
                    index: List[Partition], monomials: List[Partition]) -> Dict[Tuple[Partition, Partition], Fraction]:
    # columns of the system are basis vectors in monomial coordinates
    cols = [_coords(basis[mu], monomials) for mu in index]
    system = [[cols[j][i] for j in range(len(index))] for i in range(len(monomials))]
    rhs_cols = [_coords(targets[lam], monomials) for lam in index]
    rhs = [[rhs_cols[j][i] for j in range(len(index))] for i in range(len(monomials))]
    try:
        sol = linalg.solve(system, rhs)
    except ZeroDivisionError as exc:
        raise SingularBasis(f"basis is not independent in {len(index)} dimensions") from exc
    return {(mu, lam): sol[i][j] for i, mu in enumerate(index) for j, lam in enumerate(index)}


def _slice_monomials(n: int, d: int) -> List[Partition]:
    return slice_basis(n, d)


def matrix_A(d: int, n: int | None = None, engine: str = "auto") -> BasisMatrix:
    """Coefficients of ``ch^lam`` in the gamma basis: ``ch^lam = sum_mu A[mu,lam] gamma^mu``."""
    n = 2 * d if n is None else n
    if n < 2 * d:
        raise ValueError(f"need n >= 2d, got n={n}, d={d}")
    index = ordered_descending(d)
    monos = _slice_monomials(n, d)
    targets = {lam: basis_ch(lam, n) for lam in index}
    basis = {mu: basis_gamma(mu, n, engine) for mu in index}
    return BasisMatrix("A", d, n, index, _solve_in_basis(targets, basis, index, monos))


def matrix_B(d: int, n: int | None = None) -> BasisMatrix:
    """Coefficients of ``ch^lam`` in the monomial basis ``p^mu``."""
    n = 2 * d if n is None else n
    if n < 2 * d:
        raise ValueError(f"need n >= 2d, got n={n}, d={d}")
    index = ordered_descending(d)
    monos = _slice_monomials(n, d)
    targets = {lam: basis_ch(lam, n) for lam in index}
    basis = {mu: basis_p(mu, n) for mu in index}
    return BasisMatrix("B", d, n, index, _solve_in_basis(targets, basis, index, monos))


def det_A_formula(d: int) -> Fraction:
    """``prod_{lam |- d} prod_i (1/(i-1)!)^alpha_i``."""
    out = Fraction(1)
    for lam in enumerate_partitions(d):
        for i in lam:
            out /= factorial(i - 1)
    return out


def det_B_formula(d: int) -> Fraction:
    """``prod_{lam |- d} prod_i (1/i!)^alpha_i alpha_i!``."""
    out = Fraction(1)
    for lam in enumerate_partitions(d):
        for i, a in Counter(lam).items():
            out *= Fraction(factorial(a), factorial(i) ** a)
    return out


def diag_A_formula(lam: Partition) -> Fraction:
    out = Fraction(1)
    for i in lam:
        out *= Fraction((-1) ** (i - 1), factorial(i - 1))
    return out


def diag_B_formula(lam: Partition) -> Fraction:
    out = Fraction(1)
    for i, a in Counter(lam).items():
        out *= factorial(a) * Fraction((-1) ** a, factorial(i)) ** a
    return out


# ---------------------------------------------------------------------------
# relations and presentation


def _chi_coords(f: ClassFunction, index: List[Partition]) -> List:
    extra = set(lam for lam, _ in f.items()) - set(index)
    if extra:
        raise SingularBasis(f"element leaves the expected slice: {sorted(extra)}")
    return [f[lam] for lam in index]


def relation_poly(lam: Partition, n: int | None = None, engine: str = "auto") -> ChernPoly:
    """Integer polynomial r_lam with ``r_lam(epsilon_n(1), ...) = chi_{lam'}`` for n >= 2d.

    Computed by solving in the basis of epsilon cup monomials at weight n
    (default the stable weight 2d).
    """
    lam = make_partition(lam)
    d = sum(lam)
    if d < 1:
        raise ValueError("relation_poly needs |lam| >= 1")
    n = 2 * d if n is None else n
    if n < 2 * d:
        raise ValueError(f"need n >= 2d, got n={n}, d={d}")
    index = ordered_descending(d)
    slice_ = slice_basis(n, d)
    cols = [_chi_coords(epsilon_monomial(mu, n, engine), slice_) for mu in index]
    system = [[cols[j][i] for j in range(len(index))] for i in range(len(slice_))]
    target = _chi_coords(ClassFunction.basis(associate(lam, n)), slice_)
    try:
        sol = linalg.solve(system, [[x] for x in target])
    except ZeroDivisionError as exc:
        raise SingularBasis(f"epsilon monomials of degree {d} are dependent at n={n}") from exc
    coeffs = {}
    for mu, row in zip(index, sol):
        c = row[0]
        if c.denominator != 1:
            raise NonIntegerCoefficient(f"r_{lam} has coefficient {c} on c^{mu}")
        coeffs[mu] = c.numerator
    return ChernPoly(coeffs)


@dataclass
class Relation:
    lam: Partition
    poly: ChernPoly
    vanishes: bool


@dataclass
class Presentation:
    n: int
    degree_bound: int
    generators: List[str]
    relations: List[Relation]
    betti: List[int]
    problems: List[str] = field(default_factory=list)

    @property
    def verified(self) -> bool:
        return not self.problems


def betti(n: int) -> List[int]:
    """Ranks ``p(n, n-i)`` of H^{2i} for i = 0 .. n-1."""
    if n < 0:
        raise ValueError("n must be non-negative")
    return [count_into_parts(n, n - i) for i in range(max(n, 1))]


def presentation(n: int, degree_bound: int | None = None, engine: str = "auto") -> Presentation:
    """All relations r_lam with ``sum (i+1) alpha_i > n`` and ``|lam| <= degree_bound``.

    Every relation is checked to vanish in C(S_n); every other lam up to the
    bound is checked to evaluate to ``chi_{lam'}``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    bound = n if degree_bound is None else degree_bound
    if bound < 1:
        raise ValueError("degree bound must be positive")
    relations, problems = [], []
    for d in range(1, bound + 1):
        for lam in ordered_descending(d):
            poly = relation_poly(lam, engine=engine)
            value = poly.evaluate(n, engine)
            if relation_weight(lam) > n:
                relations.append(Relation(lam, poly, not value))
                if value:
                    problems.append(f"r_{list(lam)} does not vanish in C(S_{n})")
            elif value != ClassFunction.basis(associate(lam, n)):
                problems.append(f"r_{list(lam)} does not evaluate to chi_{list(associate(lam, n))}")
    return Presentation(
        n=n,
        degree_bound=bound,
        generators=[f"c{i}" for i in range(1, n)],
        relations=relations,
        betti=betti(n),
        problems=problems,
    )


# ---------------------------------------------------------------------------
# graded rank checks


@dataclass
class RankRow:
    d: int
    expected: int
    rank: int
    divisors: List[int]

    @property
    def ok(self) -> bool:
        return self.rank == self.expected and all(x == 1 for x in self.divisors) \
            and len(self.divisors) == self.expected


def graded_rank_check(n: int, degree_bound: int | None = None, engine: str = "auto") -> List[RankRow]:
    """Compare the span of degree-d epsilon monomials with all of C(S_n)(d).

    For each d the evaluation matrix (rows = c-monomials of weighted degree d,
    columns = classes of degree d) must have rank ``p(n, n-d)`` over Q and all
    elementary divisors equal to 1 over Z.
    """
    bound = max(n - 1, 0) if degree_bound is None else degree_bound
    rows = []
    for d in range(bound + 1):
        slice_ = slice_basis(n, d)
        matrix = [_chi_coords(epsilon_monomial(mu, n, engine), slice_) for mu in enumerate_partitions(d)]
        expected = count_into_parts(n, n - d) if n else int(d == 0)
        if slice_:
            r = linalg.rank(matrix)
            divisors = linalg.elementary_divisors(matrix)
        else:
            r, divisors = 0, []
        rows.append(RankRow(d, expected, r, divisors))
    return rows


def slice_dimension(n: int, d: int) -> int:
    return sum(1 for lam in enumerate_partitions(n) if degree(lam) == d)

