"""Integer partitions as canonical weakly decreasing tuples.

A partition is represented by a plain ``tuple`` of positive ints sorted in
weakly decreasing order; the empty tuple is the unique partition of 0.
Multiplicity profiles ``(alpha_1, alpha_2, ...)`` are computed on demand.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterable, Tuple

from .errors import Infeasible, WeightMismatch

Partition = Tuple[int, ...]


def make_partition(parts: Iterable[int]) -> Partition:
    """Return the canonical form of ``parts``; zeros are rejected."""
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if out and out[-1] < 1:
        raise ValueError(f"partition parts must be positive: {out}")
    return out


def weight(lam: Partition) -> int:
    return sum(lam)


def length(lam: Partition) -> int:
    return len(lam)


def multiplicities(lam: Partition, size: int | None = None) -> Tuple[int, ...]:
    """Multiplicity profile ``(alpha_1, ..., alpha_size)``.

    ``size`` defaults to the largest part.
    """
    if size is None:
        size = lam[0] if lam else 0
    counts = Counter(lam)
    return tuple(counts.get(i, 0) for i in range(1, size + 1))


def from_multiplicities(alphas: Iterable[int]) -> Partition:
    """Inverse of :func:`multiplicities`; ``alphas[0]`` counts the parts equal to 1."""
    parts = []
    for i, a in enumerate(alphas, start=1):
        if a < 0:
            raise Infeasible(f"negative multiplicity {a} for part {i}")
        parts.extend([i] * a)
    return tuple(sorted(parts, reverse=True))


def _order_key(lam: Partition) -> Tuple[int, ...]:
    n = sum(lam)
    return multiplicities(lam, n)


@lru_cache(maxsize=None)
def _enumerate(n: int) -> Tuple[Partition, ...]:
    found = []

    def rec(remaining: int, largest: int, prefix: list) -> None:
        if remaining == 0:
            found.append(tuple(prefix))
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            rec(remaining - part, part, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(sorted(found, key=_order_key))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of ``n``, ascending in the multiplicity-lex order.

    ``(n)`` comes first and ``(1^n)`` last.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return list(_enumerate(n))


@lru_cache(maxsize=None)
def count_into_parts(n: int, k: int) -> int:
    """Number of partitions of ``n`` with exactly ``k`` parts."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0 or k > n:
        return 0
    # either some part is 1 (drop it) or every part is >= 2 (subtract 1 from each)
    return count_into_parts(n - 1, k - 1) + count_into_parts(n - k, k)


def partition_count(n: int) -> int:
    return sum(count_into_parts(n, k) for k in range(n + 1))


def degree(lam: Partition) -> int:
    """Minimal number of transpositions for a permutation of cycle type ``lam``."""
    return sum(lam) - len(lam)


def z_value(lam: Partition) -> int:
    """Centralizer order ``prod_i i**alpha_i * alpha_i!``."""
    z = 1
    for part, alpha in Counter(lam).items():
        z *= part**alpha * factorial(alpha)
    return z


def class_size(lam: Partition) -> int:
    q, r = divmod(factorial(sum(lam)), z_value(lam))
    assert r == 0
    return q


def associate(lam: Partition, n: int) -> Partition:
    """The associated partition of ``n``.

    Multiplicities are shifted up by one index (``alpha'_i = alpha_{i-1}``)
    and the result is padded with ones, ``alpha'_1 = n - d - sum(alpha)``.
    Raises :class:`Infeasible` when that padding would be negative.
    """
    d = sum(lam)
    ones = n - d - len(lam)
    if ones < 0:
        raise Infeasible(f"associate({lam}, {n}): alpha'_1 = {ones} < 0")
    return tuple(p + 1 for p in lam) + (1,) * ones


def is_associate_feasible(lam: Partition, n: int) -> bool:
    return sum(p + 1 for p in lam) <= n


def relation_weight(lam: Partition) -> int:
    """``sum_i (i+1) alpha_i``; a relation is needed exactly when this exceeds n."""
    return sum(p + 1 for p in lam)


def lex_compare(lam: Partition, mu: Partition) -> int:
    """Compare by the lexicographic order of multiplicity sequences.

    Returns -1, 0 or 1. ``(1^d)`` is the largest partition of d, ``(d)`` the smallest.
    """
    if sum(lam) != sum(mu):
        raise WeightMismatch(f"|{lam}| != |{mu}|")
    a, b = _order_key(lam), _order_key(mu)
    return (a > b) - (a < b)


def succ_compare(lam: Partition, mu: Partition, n: int) -> int:
    """The order on partitions of d induced by comparing associated partitions of n."""
    return lex_compare(associate(lam, n), associate(mu, n))


def remove_one(lam: Partition) -> Partition | None:
    """Drop one part equal to 1, or return None if there is none."""
    if not lam or lam[-1] != 1:
        return None
    return lam[:-1]


def add_part(lam: Partition, m: int) -> Partition:
    return tuple(sorted(lam + (m,), reverse=True))
