"""Identity suites run by ``hilbcup verify``.

Each suite walks every case up to its bounds and records the first
counterexample with both sides of the failing identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial
from typing import Callable, Dict, Iterator, List, Tuple

from . import classalg as ca
from . import hilbert as hb
from . import linalg
from . import symfun as sf
from .errors import UnknownSuite
from .partitions import associate, enumerate_partitions, lex_compare, relation_weight, succ_compare


@dataclass
class VerificationReport:
    suite: str
    params: Dict[str, object]
    cases: int = 0
    failures: int = 0
    counterexample: Dict[str, str] | None = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
            "counterexample": self.counterexample,
        }


# A case yields (label, lhs, rhs); the case passes when lhs == rhs.
Case = Tuple[str, object, object]


def _run(name: str, params: dict, cases: Iterator[Case]) -> VerificationReport:
    report = VerificationReport(name, params)
    for label, lhs, rhs in cases:
        report.cases += 1
        if lhs != rhs:
            report.failures += 1
            if report.counterexample is None:
                report.counterexample = {"case": label, "lhs": repr(lhs), "rhs": repr(rhs)}
    return report


def _chi(n: int):
    for lam in enumerate_partitions(n):
        yield lam, ca.ClassFunction.basis(lam)


def goulden_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(1, max_n + 1):
        t = ca.tau(n)
        for lam, f in _chi(n):
            yield (f"n={n} lam={list(lam)}", sf.phi(ca.convolve(t, f, engine)),
                   sf.goulden_delta(sf.phi(f)))


def cup_goulden_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(1, max_n + 1):
        t = ca.tau(n)
        for lam, f in _chi(n):
            yield (f"n={n} lam={list(lam)}", sf.phi(ca.cup(t, f, engine)), sf.delta_prime(sf.phi(f)))


def eps_commutator_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(0, max_n + 1):
        for lam, f in _chi(n):
            _, lhs, rhs = ca.verify_eps_commutator(n, f, engine)
            yield f"n={n} lam={list(lam)}", lhs, rhs


def eps_series_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(0, max_n + 1):
        yield f"n={n}", sf.phi(ca.epsilon(n)), sf.epsilon_series_coefficient(n)


def d_consistency_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(1, max_n + 1):
        for q in sf.weight_basis(n):
            label = f"n={n} q={q!r}"
            total = sf.PPoly()
            for i in range(n + 1):
                total = total + sf.d_component(i, q)
            yield label + " D=sum D_i", sf.d_operator(q), total
            yield label + " D_1=-Delta'", sf.d_component(1, q), -sf.delta_prime(q)


def main_shadow_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(1, max_n + 1):
        for k in range(1, n):
            ek = ca.epsilon_component(n, k)
            for lam, f in _chi(n):
                yield (f"n={n} k={k} lam={list(lam)}", sf.phi(ca.cup(ek, f, engine)),
                       sf.chern_operator(k, n, sf.phi(f)))


def engines_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(1, max_n + 1):
        parts = enumerate_partitions(n)
        for lam in parts:
            for mu in parts:
                yield (f"n={n} lam={list(lam)} mu={list(mu)}",
                       ca.structure_constants(lam, mu, "bruteforce"),
                       ca.structure_constants(lam, mu, "character"))


def det_cases(max_d: int, engine: str = "auto") -> Iterator[Case]:
    for d in range(1, max_d + 1):
        a, b = hb.matrix_A(d, engine=engine), hb.matrix_B(d)
        da, db = a.abs_determinant(), b.abs_determinant()
        yield f"d={d} |det A|", da, hb.det_A_formula(d)
        yield f"d={d} |det B|", db, hb.det_B_formula(d)
        yield f"d={d} |det A/det B|", da / db, 1
        yield f"d={d} A triangular", triangularity_violations(a, lex_compare), []
        yield f"d={d} B triangular", triangularity_violations(b, lambda mu, lam: succ_compare(mu, lam, 2 * d)), []
        yield f"d={d} diag A", a.diagonal(), {lam: hb.diag_A_formula(lam) for lam in a.index}
        yield (f"d={d} |diag B|", {k: abs(v) for k, v in b.diagonal().items()},
               {lam: abs(hb.diag_B_formula(lam)) for lam in b.index})


def triangularity_violations(m: hb.BasisMatrix, compare: Callable) -> list:
    """Entries ``(mu, lam)`` that are nonzero although mu is below lam."""
    return [(mu, lam) for (mu, lam), v in m.entries.items() if v and compare(mu, lam) < 0]


def relations_cases(max_n: int, max_d: int, engine: str = "auto") -> Iterator[Case]:
    polys = {}
    for d in range(1, max_d + 1):
        for lam in enumerate_partitions(d):
            poly = hb.relation_poly(lam, engine=engine)
            polys[lam] = poly
            yield f"lam={list(lam)} integral", poly.is_integral(), True
    for n in range(1, max_n + 1):
        for lam, poly in polys.items():
            value = poly.evaluate(n, engine)
            if relation_weight(lam) > n:
                expected = ca.ClassFunction.zero(n)
            else:
                expected = ca.ClassFunction.basis(associate(lam, n))
            yield f"n={n} lam={list(lam)}", value, expected


def ranks_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(1, max_n + 1):
        for row in hb.graded_rank_check(n, engine=engine):
            yield (f"n={n} d={row.d}", (row.rank, row.divisors),
                   (row.expected, [1] * row.expected))


def spanning_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(1, max_n + 1):
        parts = enumerate_partitions(n)
        t = ca.tau(n)
        vectors = [ca.cup(t, f, engine) for _, f in _chi(n)]
        vectors += [ca.induce_r(1, f) for _, f in _chi(n - 1)]
        rows = [[v[lam] for lam in parts] for v in vectors]
        yield f"n={n} class functions", linalg.rank(rows), len(parts)
        polys = [sf.delta_prime(q) for q in sf.weight_basis(n)]
        polys += [sf.PPoly.p(1) * q for q in sf.weight_basis(n - 1)]
        prow = [[q.coeff(lam) for lam in parts] for q in polys]
        yield f"n={n} polynomials", linalg.rank(prow), len(parts)


def restriction_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(1, max_n + 1):
        yield f"n={n} rho(eps)", ca.restrict(ca.epsilon(n)), ca.epsilon(n - 1)
        basis = list(_chi(n))
        for lam, f in basis:
            for mu, g in basis:
                yield (f"n={n} lam={list(lam)} mu={list(mu)}",
                       ca.restrict(ca.cup(f, g, engine)),
                       ca.cup(ca.restrict(f), ca.restrict(g), engine))
    if max_n >= 2:
        chi2 = ca.ClassFunction.basis((2,))
        lhs = ca.restrict(ca.convolve(chi2, chi2, engine))
        rhs = ca.convolve(ca.restrict(chi2), ca.restrict(chi2), engine)
        yield "n=2 convolution is not multiplicative", lhs != rhs, True


def induction_phi_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for n in range(0, max_n + 1):
        for m in range(1, 6):
            for lam, f in _chi(n):
                yield (f"m={m} n={n} lam={list(lam)}", sf.phi(ca.induce_r(m, f)),
                       sf.PPoly.p(m) * sf.phi(f))
    for n in range(0, min(max_n, 4) + 1):
        for lam, f in _chi(n):
            sym = ca.GroupRingElement.from_class_function(f).symmetrize_r1().to_class_function()
            yield f"r1 symmetrization n={n} lam={list(lam)}", sym, ca.induce_r(1, f)


def commutators_cases(max_n: int, engine: str = "auto") -> Iterator[Case]:
    for w in range(0, max_n + 1):
        for q in sf.weight_basis(w):
            yield f"w={w} [Delta',p1] q={q!r}", sf.commutator_delta_p1(q), sf.shift_operator(q)
            for k in range(1, max_n + 1):
                yield (f"w={w} k={k} ad^(k-1) q={q!r}", sf.ad_power_p1(k - 1, q),
                       sf.PPoly.p(k) * q * factorial(k - 1))


SUITES = (
    "goulden",
    "cup-goulden",
    "eps-commutator",
    "eps-series",
    "d-consistency",
    "main-shadow",
    "engines",
    "det",
    "relations",
    "ranks",
    "spanning",
    "restriction",
    "induction-phi",
    "commutators",
)


def verify(suite: str, max_n: int = 6, max_d: int | None = None, engine: str = "auto") -> VerificationReport:
    """Run one named suite. ``max_d`` bounds partition sizes for det/relations."""
    if max_d is None:
        max_d = min(5, max(max_n // 2, 1))
    params: Dict[str, object] = {"max_n": max_n, "engine": engine}
    if suite == "det":
        params = {"max_d": max_d, "engine": engine}
        return _run(suite, params, det_cases(max_d, engine))
    if suite == "relations":
        params["max_d"] = max_d
        return _run(suite, params, relations_cases(max_n, max_d, engine))
    table = {
        "goulden": goulden_cases,
        "cup-goulden": cup_goulden_cases,
        "eps-commutator": eps_commutator_cases,
        "eps-series": eps_series_cases,
        "d-consistency": d_consistency_cases,
        "main-shadow": main_shadow_cases,
        "engines": engines_cases,
        "ranks": ranks_cases,
        "spanning": spanning_cases,
        "restriction": restriction_cases,
        "induction-phi": induction_phi_cases,
        "commutators": commutators_cases,
    }
    if suite not in table:
        raise UnknownSuite(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or 'all'")
    return _run(suite, params, table[suite](max_n, engine))


def verify_all(max_n: int = 6, max_d: int | None = None, engine: str = "auto") -> List[VerificationReport]:
    return [verify(s, max_n, max_d, engine) for s in SUITES]

