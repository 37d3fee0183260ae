"""Exact linear algebra over Q and Z on lists of rows."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence

Matrix = List[List[Fraction]]


def to_fractions(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def rank(rows: Sequence[Sequence]) -> int:
    """Rank over Q by Gaussian elimination."""
    m = to_fractions(rows)
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(r + 1, len(m)):
            if m[i][c]:
                f = m[i][c] / m[r][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return r


def determinant(rows: Sequence[Sequence]) -> Fraction:
    """Determinant via Bareiss elimination after clearing row denominators."""
    m = to_fractions(rows)
    n = len(m)
    if n == 0:
        return Fraction(1)
    scale = Fraction(1)
    ints: List[List[int]] = []
    for row in m:
        den = lcm(*(x.denominator for x in row))
        scale *= den
        ints.append([int(x * den) for x in row])
    return Fraction(bareiss_det(ints)) / scale


def bareiss_det(a: List[List[int]]) -> int:
    """Fraction-free determinant of an integer matrix."""
    a = [row[:] for row in a]
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def solve(matrix: Sequence[Sequence], rhs: Sequence[Sequence]) -> Matrix:
    """Solve ``matrix @ X = rhs`` exactly for square nonsingular ``matrix``.

    ``rhs`` is a list of rows (one column per right-hand side).
    Raises ``ZeroDivisionError`` if the matrix is singular.
    """
    n = len(matrix)
    a = to_fractions(matrix)
    b = to_fractions(rhs)
    k = len(b[0]) if b else 0
    aug = [a[i] + b[i] for i in range(n)]
    for c in range(n):
        pivot = next((i for i in range(c, n) if aug[i][c]), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        aug[c], aug[pivot] = aug[pivot], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    return [row[n:n + k] for row in aug]


def elementary_divisors(rows: Sequence[Sequence[int]]) -> List[int]:
    """Nonzero diagonal entries of the Smith normal form of an integer matrix."""
    a = [[int(x) for x in row] for row in rows]
    if not a or not a[0]:
        return []
    m, n = len(a), len(a[0])
    divisors = []
    t = 0
    while t < min(m, n):
        # pick the entry of smallest absolute value in the remaining block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        done = False
        while not done:
            done = True
            p = a[t][t]
            for i in range(t + 1, m):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    done = False
            for j in range(t + 1, n):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    done = False
            if not done:
                # move a smaller remainder to the pivot and repeat
                best = min(
                    [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
                    + [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
                )
                _, i, j = best
                if j == t:
                    a[t], a[i] = a[i], a[t]
                else:
                    for row in a:
                        row[t], row[j] = row[j], row[t]
                continue
            # pivot must divide the remaining block
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if a[i][j] % p),
                None,
            )
            if bad is not None:
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                done = False
        divisors.append(abs(a[t][t]))
        t += 1
    return divisors

