"""Irreducible characters of S_n by the Murnaghan-Nakayama rule."""

from __future__ import annotations

import os
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Tuple

from .errors import BoundExceeded, WeightMismatch
from .partitions import Partition, enumerate_partitions

DEFAULT_MAX_N = 14


def max_table_n() -> int:
    """Size cap for character tables, read from ``HILBCUP_MAX_N``."""
    raw = os.environ.get("HILBCUP_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def _strip_removals(lam: Partition, r: int):
    """Yield ``(sign, smaller_partition)`` for each border strip of size r in lam."""
    k = len(lam)
    beta = [lam[i] + (k - 1 - i) for i in range(k)]
    beads = set(beta)
    for b in beta:
        target = b - r
        if target < 0 or target in beads:
            continue
        # leg length = number of beads strictly between target and b
        height = sum(1 for x in beta if target < x < b)
        new_beta = sorted((target if x == b else x for x in beta), reverse=True)
        parts = tuple(new_beta[i] - (k - 1 - i) for i in range(k))
        yield (-1) ** height, tuple(p for p in parts if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: Partition, mu: Partition) -> int:
    if not mu:
        return 1 if not lam else 0
    r, rest = mu[0], mu[1:]
    total = 0
    for sign, smaller in _strip_removals(lam, r):
        total += sign * _mn(smaller, rest)
    return total


def mn_character(lam: Partition, mu: Partition) -> int:
    """chi^lam evaluated on the class of cycle type mu."""
    if sum(lam) != sum(mu):
        raise WeightMismatch(f"|{lam}| != |{mu}|")
    return _mn(tuple(lam), tuple(mu))


@dataclass(frozen=True)
class CharacterTable:
    n: int
    partitions: Tuple[Partition, ...]
    entries: Dict[Tuple[Partition, Partition], int]

    def __call__(self, lam: Partition, mu: Partition) -> int:
        return self.entries[(lam, mu)]

    def row(self, lam: Partition) -> list[int]:
        return [self.entries[(lam, mu)] for mu in self.partitions]

    def dimension(self, lam: Partition) -> int:
        return self.entries[(lam, (1,) * self.n)]


_tables: Dict[int, CharacterTable] = {}
_lock = threading.Lock()


def table(n: int) -> CharacterTable:
    """Complete character table of S_n, built once and cached.

    Rows and columns follow :func:`enumerate_partitions` order.
    """
    if n < 1:
        raise ValueError("n must be positive")
    bound = max_table_n()
    if n > bound:
        raise BoundExceeded(f"character table for n={n} exceeds HILBCUP_MAX_N={bound}")
    cached = _tables.get(n)
    if cached is not None:
        return cached
    parts = tuple(enumerate_partitions(n))
    entries = {(lam, mu): _mn(lam, mu) for lam in parts for mu in parts}
    built = CharacterTable(n, parts, entries)
    with _lock:
        # publish only a complete table
        return _tables.setdefault(n, built)
