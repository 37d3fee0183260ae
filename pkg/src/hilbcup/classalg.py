"""Class functions on S_n: convolution, the graded cup product, restriction and induction.

A class function is stored in the basis of class indicators ``chi_lambda``
(the sum of all permutations of cycle type lambda). Products are computed
from structure constants, either by direct enumeration of S_n
("bruteforce") or from the character table ("character").
"""

from __future__ import annotations

from collections import Counter, defaultdict
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from math import factorial, lcm
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple

from . import characters
from .errors import NonIntegerResult, OutOfRange, WeightMismatch
from .partitions import (
    Partition,
    add_part,
    class_size,
    degree,
    enumerate_partitions,
    make_partition,
    remove_one,
)

ENGINES = ("bruteforce", "character", "auto")
BRUTEFORCE_MAX_N = 5

Coeff = Rational  # int or Fraction


def _normalize(value: Coeff) -> Coeff:
    if isinstance(value, Fraction) and value.denominator == 1:
        return value.numerator
    return value


class ClassFunction:
    """Immutable element of C(S_n) in the ``chi_lambda`` basis."""

    __slots__ = ("n", "_coeffs")

    def __init__(self, n: int, coeffs: Mapping[Partition, Coeff] | None = None):
        self.n = int(n)
        clean: Dict[Partition, Coeff] = {}
        for lam, value in (coeffs or {}).items():
            lam = make_partition(lam)
            if sum(lam) != self.n:
                raise WeightMismatch(f"partition {lam} is not a partition of {self.n}")
            value = _normalize(clean.get(lam, 0) + value)
            if value:
                clean[lam] = value
            else:
                clean.pop(lam, None)
        self._coeffs = clean

    @classmethod
    def basis(cls, lam: Iterable[int], coeff: Coeff = 1) -> "ClassFunction":
        lam = make_partition(lam)
        return cls(sum(lam), {lam: coeff})

    @classmethod
    def zero(cls, n: int) -> "ClassFunction":
        return cls(n)

    @property
    def coeffs(self) -> Dict[Partition, Coeff]:
        return dict(self._coeffs)

    def items(self):
        return self._coeffs.items()

    def __getitem__(self, lam: Partition) -> Coeff:
        return self._coeffs.get(tuple(lam), 0)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_integral(self) -> bool:
        return all(isinstance(v, int) for v in self._coeffs.values())

    def _check(self, other: "ClassFunction") -> None:
        if self.n != other.n:
            raise WeightMismatch(f"class functions on S_{self.n} and S_{other.n}")

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        out = dict(self._coeffs)
        for lam, v in other._coeffs.items():
            out[lam] = out.get(lam, 0) + v
        return ClassFunction(self.n, out)

    def __neg__(self) -> "ClassFunction":
        return ClassFunction(self.n, {lam: -v for lam, v in self._coeffs.items()})

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return self + (-other)

    def scale(self, c: Coeff) -> "ClassFunction":
        return ClassFunction(self.n, {lam: c * v for lam, v in self._coeffs.items()})

    def __rmul__(self, c: Coeff) -> "ClassFunction":
        return self.scale(c)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.n == other.n and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"ClassFunction({self.n}, 0)"
        terms = " + ".join(f"{v}*chi{list(lam)}" for lam, v in self.sorted_items())
        return f"ClassFunction({self.n}, {terms})"

    def sorted_items(self):
        order = {lam: i for i, lam in enumerate(enumerate_partitions(self.n))}
        return sorted(self._coeffs.items(), key=lambda kv: order[kv[0]])

    def degree_component(self, d: int) -> "ClassFunction":
        return ClassFunction(self.n, {lam: v for lam, v in self._coeffs.items() if degree(lam) == d})

    def degrees(self) -> set[int]:
        return {degree(lam) for lam in self._coeffs}

    def evaluate(self, lam: Partition) -> Coeff:
        """Value of the function on a permutation of cycle type ``lam``."""
        return self[lam]


def unit(n: int) -> ClassFunction:
    return ClassFunction.basis((1,) * n) if n else ClassFunction(0, {(): 1})


def tau(n: int) -> ClassFunction:
    """Sum of all transpositions in S_n (zero for n < 2)."""
    if n < 2:
        return ClassFunction.zero(n)
    return ClassFunction.basis((2,) + (1,) * (n - 2))


def epsilon(n: int) -> ClassFunction:
    """The alternating character, ``sum sgn(pi) pi``."""
    return ClassFunction(n, {lam: (-1) ** degree(lam) for lam in enumerate_partitions(n)})


def epsilon_component(n: int, i: int) -> ClassFunction:
    """Degree-i slice of the alternating character."""
    if i < 0 or i > max(n - 1, 0):
        raise OutOfRange(f"degree {i} outside 0..{max(n - 1, 0)} for S_{n}")
    return epsilon(n).degree_component(i)


# ---------------------------------------------------------------------------
# brute-force engine: explicit permutations of {0..n-1}

Perm = Tuple[int, ...]


def compose(s: Perm, p: Perm) -> Perm:
    """(s p)(x) = s(p(x))."""
    return tuple(s[x] for x in p)


def inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def cycle_type(p: Perm) -> Partition:
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        k, x = 0, start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def representative(lam: Partition) -> Perm:
    """A fixed permutation of cycle type lam built from consecutive cycles."""
    n = sum(lam)
    perm = list(range(n))
    start = 0
    for part in lam:
        for j in range(part):
            perm[start + j] = start + (j + 1) % part
        start += part
    return tuple(perm)


def perm_degree(p: Perm) -> int:
    return degree(cycle_type(p))


@lru_cache(maxsize=None)
def _all_perms(n: int) -> Tuple[Perm, ...]:
    return tuple(permutations(range(n)))


@lru_cache(maxsize=None)
def _brute_counts(n: int, nu: Partition) -> Dict[Tuple[Partition, Partition], int]:
    sigma = representative(nu)
    counts: Counter = Counter()
    for a in _all_perms(n):
        b = compose(inverse(a), sigma)
        counts[(cycle_type(a), cycle_type(b))] += 1
    return dict(counts)


class GroupRingElement:
    """Sparse element of Q[S_n]; only used by the brute-force engine and its tests."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Perm, Coeff] | None = None):
        self.n = n
        self.terms = {p: v for p, v in (terms or {}).items() if v}

    @classmethod
    def from_class_function(cls, f: ClassFunction) -> "GroupRingElement":
        terms = {}
        for p in _all_perms(f.n):
            v = f[cycle_type(p)]
            if v:
                terms[p] = v
        return cls(f.n, terms)

    def __mul__(self, other: "GroupRingElement") -> "GroupRingElement":
        if self.n != other.n:
            raise WeightMismatch("group ring elements of different weight")
        out: Dict[Perm, Coeff] = defaultdict(int)
        for s, a in self.terms.items():
            for p, b in other.terms.items():
                out[compose(s, p)] += a * b
        return GroupRingElement(self.n, out)

    def cup(self, other: "GroupRingElement") -> "GroupRingElement":
        """Product keeping only pairs whose degrees add."""
        out: Dict[Perm, Coeff] = defaultdict(int)
        for s, a in self.terms.items():
            ds = perm_degree(s)
            for p, b in other.terms.items():
                sp = compose(s, p)
                if ds + perm_degree(p) == perm_degree(sp):
                    out[sp] += a * b
        return GroupRingElement(self.n, out)

    def iota(self) -> "GroupRingElement":
        """Image under the inclusion S_n -> S_{n+1} fixing the new point."""
        return GroupRingElement(self.n + 1, {p + (self.n,): v for p, v in self.terms.items()})

    def symmetrize_r1(self) -> "GroupRingElement":
        """``pi -> (1/n!) sum_t t iota(pi) t^-1`` over t in S_{n+1}."""
        lifted = self.iota()
        out: Dict[Perm, Coeff] = defaultdict(int)
        scale = Fraction(1, factorial(self.n))
        for t in _all_perms(self.n + 1):
            t_inv = inverse(t)
            for p, v in lifted.terms.items():
                out[compose(compose(t, p), t_inv)] += scale * v
        return GroupRingElement(self.n + 1, out)

    def to_class_function(self) -> ClassFunction:
        coeffs: Dict[Partition, Coeff] = {}
        for p, v in self.terms.items():
            lam = cycle_type(p)
            if lam in coeffs and coeffs[lam] != v:
                raise ValueError("element is not constant on conjugacy classes")
            coeffs[lam] = v
        for lam, v in coeffs.items():
            if sum(1 for p in self.terms if cycle_type(p) == lam) != class_size(lam):
                raise ValueError("element is not constant on conjugacy classes")
        return ClassFunction(self.n, coeffs)


# ---------------------------------------------------------------------------
# character engine


@lru_cache(maxsize=None)
def _char_data(n: int):
    tab = characters.table(n)
    kappas = tab.partitions
    dims = [tab.dimension(k) for k in kappas]
    big = lcm(*dims)
    return tab, kappas, dims, big


def _character_constants(lam: Partition, mu: Partition) -> Dict[Partition, int]:
    n = sum(lam)
    tab, kappas, dims, big = _char_data(n)
    weights = [tab(k, lam) * tab(k, mu) * (big // d) for k, d in zip(kappas, dims)]
    prefactor = class_size(lam) * class_size(mu)
    denom = factorial(n) * big
    out = {}
    for nu in kappas:
        s = sum(w * tab(k, nu) for w, k in zip(weights, kappas) if w)
        if not s:
            continue
        q, r = divmod(prefactor * s, denom)
        if r or q < 0:
            raise NonIntegerResult(f"a_{{{lam},{mu}}}^{nu} = {Fraction(prefactor * s, denom)}")
        if q:
            out[nu] = q
    return out


def resolve_engine(engine: str, n: int) -> str:
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}; choose from {ENGINES}")
    if engine == "auto":
        return "bruteforce" if n <= BRUTEFORCE_MAX_N else "character"
    if engine == "character" and n < 1:
        return "bruteforce"
    return engine


@lru_cache(maxsize=None)
def _structure_constants(lam: Partition, mu: Partition, engine: str) -> Tuple[Tuple[Partition, int], ...]:
    n = sum(lam)
    if engine == "bruteforce":
        out = {}
        for nu in enumerate_partitions(n):
            c = _brute_counts(n, nu).get((lam, mu), 0)
            if c:
                out[nu] = c
    else:
        out = _character_constants(lam, mu)
    return tuple(out.items())


def structure_constants(lam: Partition, mu: Partition, engine: str = "auto") -> Dict[Partition, int]:
    """``{nu: a_{lam mu}^nu}`` with ``chi_lam * chi_mu = sum_nu a^nu chi_nu``.

    ``a^nu`` counts pairs (a, b) of types lam and mu whose product is one
    fixed permutation of type nu.
    """
    lam, mu = make_partition(lam), make_partition(mu)
    if sum(lam) != sum(mu):
        raise WeightMismatch(f"|{lam}| != |{mu}|")
    return dict(_structure_constants(lam, mu, resolve_engine(engine, sum(lam))))


def _product(f: ClassFunction, g: ClassFunction, engine: str, graded: bool) -> ClassFunction:
    f._check(g)
    out: Dict[Partition, Coeff] = defaultdict(int)
    for lam, a in f.items():
        for mu, b in g.items():
            target = degree(lam) + degree(mu)
            for nu, c in structure_constants(lam, mu, engine).items():
                if graded and degree(nu) != target:
                    continue
                out[nu] += a * b * c
    return ClassFunction(f.n, out)


def convolve(f: ClassFunction, g: ClassFunction, engine: str = "auto") -> ClassFunction:
    """Convolution product ``(f*g)(pi) = sum_sigma f(pi sigma^-1) g(sigma)``."""
    return _product(f, g, engine, graded=False)


def cup(f: ClassFunction, g: ClassFunction, engine: str = "auto") -> ClassFunction:
    """Graded cup product: convolution restricted to terms where degrees add."""
    return _product(f, g, engine, graded=True)


def cup_power(f: ClassFunction, k: int, engine: str = "auto") -> ClassFunction:
    out = unit(f.n)
    for _ in range(k):
        out = cup(out, f, engine)
    return out


def restrict(f: ClassFunction) -> ClassFunction:
    """Restriction of functions from S_n to S_{n-1}."""
    if f.n < 1:
        raise ValueError("cannot restrict from S_0")
    out = {}
    for lam, v in f.items():
        smaller = remove_one(lam)
        if smaller is not None:
            out[smaller] = v
    return ClassFunction(f.n - 1, out)


def induce_r(m: int, f: ClassFunction) -> ClassFunction:
    """The induction operator r_m: C(S_n) -> C(S_{n+m}).

    Closed form ``r_m(chi_mu) = m (alpha_m(mu) + 1) chi_{mu + (m)}``.
    """
    if m < 1:
        raise ValueError("m must be positive")
    out: Dict[Partition, Coeff] = defaultdict(int)
    for mu, v in f.items():
        alpha = mu.count(m)
        out[add_part(mu, m)] += m * (alpha + 1) * v
    return ClassFunction(f.n + m, out)


def verify_eps_commutator(n: int, f: ClassFunction, engine: str = "auto"):
    """Check the commutator identity between r_1 and cup-multiplication by epsilon.

    ``eps_{n+1} u r1(f) - r1(eps_n u f) == -tau_{n+1} u r1(eps_n u f) + r1(tau_n u eps_n u f)``.
    Returns ``(holds, lhs, rhs)``.
    """
    if f.n != n:
        raise WeightMismatch(f"f lives on S_{f.n}, expected S_{n}")
    ef = cup(epsilon(n), f, engine)
    r1_ef = induce_r(1, ef)
    lhs = cup(epsilon(n + 1), induce_r(1, f), engine) - r1_ef
    rhs = -cup(tau(n + 1), r1_ef, engine) + induce_r(1, cup(tau(n), ef, engine))
    return lhs == rhs, lhs, rhs


def slice_basis(n: int, d: int) -> list[Partition]:
    """Cycle types of degree d, in enumeration order."""
    return [lam for lam in enumerate_partitions(n) if degree(lam) == d]
