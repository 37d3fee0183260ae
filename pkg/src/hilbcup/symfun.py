"""The polynomial ring Q[p_1, p_2, ...] and the differential operators acting on it.

Monomials ``p_{l_1} ... p_{l_s}`` are keyed by the partition ``(l_1, ..., l_s)``,
so conformal weight is the partition's size and cohomological degree is its
``degree``. Coefficients are ``Fraction``.
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Callable, Dict, Iterable, Mapping

from .classalg import ClassFunction
from .errors import MixedWeight
from .partitions import Partition, degree, enumerate_partitions, make_partition, z_value

Monomial = Partition


class PPoly:
    """Sparse polynomial in power sums with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, object] | None = None):
        clean: Dict[Monomial, Fraction] = {}
        for mono, c in (terms or {}).items():
            mono = make_partition(mono)
            c = clean.get(mono, 0) + Fraction(c)
            if c:
                clean[mono] = c
            else:
                clean.pop(mono, None)
        self._terms = clean

    @classmethod
    def _raw(cls, terms: Dict[Monomial, Fraction]) -> "PPoly":
        obj = cls.__new__(cls)
        obj._terms = {m: c for m, c in terms.items() if c}
        return obj

    @classmethod
    def monomial(cls, parts: Iterable[int], coeff=1) -> "PPoly":
        return cls({make_partition(parts): coeff})

    @classmethod
    def p(cls, m: int) -> "PPoly":
        return cls({(m,): 1})

    @classmethod
    def one(cls) -> "PPoly":
        return cls({(): 1})

    def items(self):
        return self._terms.items()

    @property
    def terms(self) -> Dict[Monomial, Fraction]:
        return dict(self._terms)

    def coeff(self, mono: Iterable[int]) -> Fraction:
        return self._terms.get(make_partition(mono), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = PPoly({(): other})
        if not isinstance(other, PPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __add__(self, other: "PPoly") -> "PPoly":
        out = dict(self._terms)
        for m, c in other._terms.items():
            out[m] = out.get(m, 0) + c
        return PPoly._raw(out)

    def __neg__(self) -> "PPoly":
        return PPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "PPoly") -> "PPoly":
        return self + (-other)

    def scale(self, c) -> "PPoly":
        c = Fraction(c)
        return PPoly._raw({m: c * v for m, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        out: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                out[tuple(sorted(m1 + m2, reverse=True))] += c1 * c2
        return PPoly._raw(out)

    def __rmul__(self, c) -> "PPoly":
        return self.scale(c)

    def weights(self) -> set[int]:
        return {sum(m) for m in self._terms}

    def degrees(self) -> set[int]:
        return {degree(m) for m in self._terms}

    def weight(self) -> int:
        """The unique conformal weight; raises :class:`MixedWeight` otherwise."""
        ws = self.weights()
        if len(ws) > 1:
            raise MixedWeight(f"polynomial has weights {sorted(ws)}")
        return ws.pop() if ws else 0

    def sorted_items(self):
        def key(kv):
            m = kv[0]
            return (sum(m), tuple(reversed(m)))

        return sorted(self._terms.items(), key=key)

    def __repr__(self) -> str:
        if not self._terms:
            return "PPoly(0)"
        parts = []
        for m, c in self.sorted_items():
            mono = "*".join(f"p{i}^{e}" if e > 1 else f"p{i}" for i, e in sorted(Counter(m).items())) or "1"
            parts.append(f"{c}*{mono}")
        return "PPoly(" + " + ".join(parts) + ")"


def apply_linear(op: Callable[[Monomial], Dict[Monomial, Fraction]], q: PPoly) -> PPoly:
    """Extend a map on monomials linearly."""
    out: Dict[Monomial, Fraction] = defaultdict(Fraction)
    for m, c in q.items():
        for m2, c2 in op(m).items():
            out[m2] += c * c2
    return PPoly._raw(out)


def _replace(mono: Monomial, removed_positions: Iterable[int], added: Iterable[int]) -> Monomial:
    drop = set(removed_positions)
    rest = [p for i, p in enumerate(mono) if i not in drop]
    return tuple(sorted(rest + list(added), reverse=True))


# ---------------------------------------------------------------------------
# Phi: C(S_n) -> P_n


@lru_cache(maxsize=None)
def _phi_scale(lam: Partition) -> Fraction:
    return Fraction(1, z_value(lam))


def phi(f: ClassFunction) -> PPoly:
    """``chi_lam -> prod_i (1/alpha_i!) (p_i/i)^alpha_i``, i.e. ``p_lam / z_lam``."""
    return PPoly._raw({lam: Fraction(v) * _phi_scale(lam) for lam, v in f.items()})


def phi_inverse(q: PPoly) -> ClassFunction:
    n = q.weight()
    out = {}
    for lam, c in q.items():
        v = c * z_value(lam)
        out[lam] = v.numerator if v.denominator == 1 else v
    return ClassFunction(n, out)


# ---------------------------------------------------------------------------
# Goulden's operator


@lru_cache(maxsize=None)
def _delta_prime_mono(m: Monomial) -> Dict[Monomial, Fraction]:
    out: Dict[Monomial, Fraction] = defaultdict(Fraction)
    for a, b in combinations(range(len(m)), 2):
        out[_replace(m, (a, b), (m[a] + m[b],))] += m[a] * m[b]
    return dict(out)


@lru_cache(maxsize=None)
def _delta_doubleprime_mono(m: Monomial) -> Dict[Monomial, Fraction]:
    out: Dict[Monomial, Fraction] = defaultdict(Fraction)
    for a, k in enumerate(m):
        for i in range(1, k):
            out[_replace(m, (a,), (i, k - i))] += Fraction(k, 2)
    return dict(out)


def delta_prime(q: PPoly) -> PPoly:
    """``(1/2) sum_{i,j} i j p_{i+j} d/dp_i d/dp_j`` -- joins two cycles."""
    return apply_linear(_delta_prime_mono, q)


def delta_doubleprime(q: PPoly) -> PPoly:
    """``(1/2) sum_{i,j} (i+j) p_i p_j d/dp_{i+j}`` -- cuts one cycle."""
    return apply_linear(_delta_doubleprime_mono, q)


def goulden_delta(q: PPoly) -> PPoly:
    return delta_prime(q) + delta_doubleprime(q)


# ---------------------------------------------------------------------------
# the Chern character operators


@lru_cache(maxsize=None)
def _d_component_mono(i: int, m: Monomial) -> Dict[Monomial, Fraction]:
    # The (i+1)! ordered tuples of derivatives collapse to unordered position sets.
    out: Dict[Monomial, Fraction] = defaultdict(Fraction)
    sign = (-1) ** i
    for positions in combinations(range(len(m)), i + 1):
        merged = sum(m[a] for a in positions)
        prod = 1
        for a in positions:
            prod *= m[a]
        out[_replace(m, positions, (merged,))] += sign * prod
    return dict(out)


def d_component(i: int, q: PPoly) -> PPoly:
    """Degree-i component of the Chern character operator.

    ``D_i = ((-1)^i/(i+1)!) sum_{n_0..n_i > 0} p_{n_0+...+n_i} prod_j n_j d/dp_{n_j}``.
    """
    if i < 0:
        raise ValueError("i must be non-negative")
    return apply_linear(lambda m: _d_component_mono(i, m), q)


def _partial(m: Monomial, j: int) -> tuple[int, Monomial] | None:
    """``d/dp_j`` of a monomial as (multiplicity, remaining monomial)."""
    count = m.count(j)
    if not count:
        return None
    idx = m.index(j)
    return count, m[:idx] + m[idx + 1:]


def d_operator(q: PPoly, weight_bound: int | None = None) -> PPoly:
    """Coefficient of t^0 in ``(-sum_m p_m t^m) exp(-sum_m m d/dp_m t^-m)`` applied to q.

    The exponential is expanded term by term: each application of
    ``E = sum_m m d/dp_m t^-m`` strictly lowers the weight, so the series
    stops once every term has been differentiated away. ``weight_bound``
    optionally caps the number of applications (defaults to the largest
    weight present, which retains every contributing term).
    """
    bound = weight_bound if weight_bound is not None else max(q.weights(), default=0)
    # layer[s] = E^k(q)/k! restricted to t-exponent -s, stored as monomial dicts
    layer: Dict[int, Dict[Monomial, Fraction]] = {0: dict(q.items())}
    total: Dict[Monomial, Fraction] = defaultdict(Fraction)
    k = 0
    while layer and k < bound:
        k += 1
        nxt: Dict[int, Dict[Monomial, Fraction]] = defaultdict(lambda: defaultdict(Fraction))
        for s, poly in layer.items():
            for mono, c in poly.items():
                for j in set(mono):
                    count, rest = _partial(mono, j)
                    nxt[s + j][rest] += c * j * count / k
        layer = {s: {m: c for m, c in poly.items() if c} for s, poly in nxt.items()}
        layer = {s: poly for s, poly in layer.items() if poly}
        sign = (-1) ** k
        for s, poly in layer.items():
            # pair t^-s with the term -p_s t^s
            for mono, c in poly.items():
                total[tuple(sorted(mono + (s,), reverse=True))] += -sign * c
    return PPoly._raw(dict(total))


def p1_power(n: int) -> PPoly:
    """``p_1^n / n!``, the image of the unit of C(S_n)."""
    return PPoly({(1,) * n: Fraction(1, factorial(n))})


# ---------------------------------------------------------------------------
# alternating character generating series


@lru_cache(maxsize=None)
def epsilon_series_coefficient(n: int) -> PPoly:
    """z^n coefficient of ``exp(sum_m (-1)^(m-1) z^m p_m / m)``.

    Uses ``n F_n = sum_{m=1}^n (-1)^(m-1) p_m F_{n-m}`` from ``F' = G' F``.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return PPoly.one()
    acc = PPoly()
    for m in range(1, n + 1):
        acc = acc + (PPoly.p(m) * epsilon_series_coefficient(n - m)).scale((-1) ** (m - 1))
    return acc.scale(Fraction(1, n))


# ---------------------------------------------------------------------------
# Chern class operators via Newton's identities


def chern_operator(k: int, n: int, q: PPoly) -> PPoly:
    """Operator counterpart of cup-multiplication by the k-th Chern class.

    With ``P_j = j! D_j`` (power sums of Chern roots) Newton's identities give
    ``k C_k = sum_{j=1}^k (-1)^(j-1) C_{k-j} P_j`` and ``C_0 = id``. The rank n
    only enters through ``D_0``, which these identities never use.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if q and q.weight() != n:
        raise MixedWeight(f"expected weight {n}, got {sorted(q.weights())}")
    return _chern(k, q)


def _chern(k: int, q: PPoly) -> PPoly:
    if k == 0:
        return q
    acc = PPoly()
    for j in range(1, k + 1):
        pj = d_component(j, q).scale(factorial(j))
        if not pj:
            continue
        acc = acc + _chern(k - j, pj).scale((-1) ** (j - 1))
    return acc.scale(Fraction(1, k))


# ---------------------------------------------------------------------------
# commutator identities


def commutator_delta_p1(q: PPoly) -> PPoly:
    """``[Delta', p_1](q) = Delta'(p_1 q) - p_1 Delta'(q)``."""
    p1 = PPoly.p(1)
    return delta_prime(p1 * q) - p1 * delta_prime(q)


def shift_operator(q: PPoly) -> PPoly:
    """``sum_{j>0} j p_{j+1} d/dp_j``."""

    def mono_op(m: Monomial) -> Dict[Monomial, Fraction]:
        out: Dict[Monomial, Fraction] = defaultdict(Fraction)
        for j in set(m):
            count, rest = _partial(m, j)
            out[tuple(sorted(rest + (j + 1,), reverse=True))] += j * count
        return out

    return apply_linear(mono_op, q)


def ad_power_p1(k: int, q: PPoly) -> PPoly:
    """``ad(X)^k(p_1)`` applied to q as an operator, X = [Delta', p_1].

    Expands ``ad(X)^k(Y) = sum_j C(k,j) (-1)^j X^(k-j) Y X^j`` with Y the
    multiplication by p_1.
    """
    from math import comb

    p1 = PPoly.p(1)
    x_powers = [q]
    for _ in range(k):
        x_powers.append(commutator_delta_p1(x_powers[-1]))
    acc = PPoly()
    for j in range(k + 1):
        term = p1 * x_powers[j]
        for _ in range(k - j):
            term = commutator_delta_p1(term)
        acc = acc + term.scale(comb(k, j) * (-1) ** j)
    return acc


def weight_basis(n: int) -> list[PPoly]:
    """Monomial basis of P_n."""
    return [PPoly.monomial(lam) for lam in enumerate_partitions(n)]
