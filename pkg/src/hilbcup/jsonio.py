"""JSON encodings. Every number is written as a decimal string ("p/q" for rationals)."""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction
from typing import Any

from .classalg import ClassFunction
from .hilbert import ChernPoly
from .partitions import Partition, make_partition
from .symfun import PPoly


def number_to_str(x) -> str:
    return str(Fraction(x))


def parse_number(s) -> int | Fraction:
    if isinstance(s, int):
        return s
    value = Fraction(str(s).strip())
    return value.numerator if value.denominator == 1 else value


def partition_to_json(lam: Partition) -> list[int]:
    return list(lam)


def partition_from_json(obj) -> Partition:
    parts = list(obj)
    if any(not isinstance(p, int) or p < 1 for p in parts):
        raise ValueError(f"invalid partition {obj!r}")
    if parts != sorted(parts, reverse=True):
        raise ValueError(f"partition must be weakly decreasing: {obj!r}")
    return tuple(parts)


def classfunction_to_json(f: ClassFunction) -> dict:
    return {
        "n": f.n,
        "coeffs": [{"partition": list(lam), "value": number_to_str(v)} for lam, v in f.sorted_items()],
    }


def classfunction_from_json(obj: Any) -> ClassFunction:
    if isinstance(obj, str):
        obj = json.loads(obj)
    n = int(obj["n"])
    coeffs = {}
    for entry in obj.get("coeffs", []):
        lam = partition_from_json(entry["partition"])
        coeffs[lam] = coeffs.get(lam, 0) + parse_number(entry["value"])
    return ClassFunction(n, coeffs)


def _powers(mono: Partition) -> list[list[int]]:
    return [[i, e] for i, e in sorted(Counter(mono).items())]


def _from_powers(powers) -> Partition:
    parts = []
    for i, e in powers:
        if int(i) < 1 or int(e) < 0:
            raise ValueError(f"invalid power entry {[i, e]}")
        parts.extend([int(i)] * int(e))
    return make_partition(parts)


def ppoly_to_json(q: PPoly) -> list[dict]:
    rows = [{"powers": _powers(m), "coeff": number_to_str(c)} for m, c in q.items()]
    rows.sort(key=lambda r: (sum(i * e for i, e in r["powers"]), r["powers"]))
    return rows


def ppoly_from_json(obj: Any) -> PPoly:
    if isinstance(obj, str):
        obj = json.loads(obj)
    terms: dict = {}
    for entry in obj:
        mono = _from_powers(entry["powers"])
        terms[mono] = terms.get(mono, 0) + Fraction(str(entry["coeff"]))
    return PPoly(terms)


def chernpoly_to_json(poly: ChernPoly) -> list[dict]:
    return [{"exponents": _powers(m), "coeff": number_to_str(c)} for m, c in poly.sorted_items()]


def chernpoly_from_json(obj: Any) -> ChernPoly:
    if isinstance(obj, str):
        obj = json.loads(obj)
    terms: dict = {}
    for entry in obj:
        mono = _from_powers(entry["exponents"])
        terms[mono] = terms.get(mono, 0) + parse_number(entry["coeff"])
    return ChernPoly(terms)


def dumps(obj: Any) -> str:
    """Canonical serialization: sorted keys, fixed separators."""
    return json.dumps(obj, sort_keys=True, indent=2)
