"""Independent reference computations used only by the tests.

None of these import the code paths they check.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from itertools import combinations_with_replacement, permutations, product
from math import factorial


def partitions_by_multisets(n):
    """All partitions of n by filtering multisets of parts."""
    if n == 0:
        return [()]
    out = []
    for k in range(1, n + 1):
        for combo in combinations_with_replacement(range(1, n + 1), k):
            if sum(combo) == n:
                out.append(tuple(sorted(combo, reverse=True)))
    return out


def cycle_type(perm):
    seen, out = set(), []
    for s in range(len(perm)):
        if s in seen:
            continue
        k, x = 0, s
        while x not in seen:
            seen.add(x)
            x = perm[x]
            k += 1
        out.append(k)
    return tuple(sorted(out, reverse=True))


def class_function_product(n, f, g):
    """Convolution of two class functions given as {cycle type: value} by
    summing over all pairs (sigma, pi) of S_n; returns {cycle type: value}."""
    perms = list(permutations(range(n)))
    tally = Counter()
    for s in perms:
        fs = f.get(cycle_type(s), 0)
        if not fs:
            continue
        for p in perms:
            gp = g.get(cycle_type(p), 0)
            if gp:
                sp = tuple(s[p[x]] for x in range(n))
                tally[sp] += fs * gp
    out = {}
    for perm, v in tally.items():
        out.setdefault(cycle_type(perm), v)
    return {k: v for k, v in out.items() if v}


def class_function_cup(n, f, g):
    """Cup product by enumerating pairs and keeping those whose degrees add."""
    perms = list(permutations(range(n)))
    deg = {p: n - len(cycle_type(p)) for p in perms}
    tally = Counter()
    for s in perms:
        fs = f.get(cycle_type(s), 0)
        if not fs:
            continue
        for p in perms:
            gp = g.get(cycle_type(p), 0)
            if not gp:
                continue
            sp = tuple(s[p[x]] for x in range(n))
            if deg[s] + deg[p] == deg[sp]:
                tally[sp] += fs * gp
    out = {}
    for perm, v in tally.items():
        out.setdefault(cycle_type(perm), v)
    return {k: v for k, v in out.items() if v}


def s3_standard_character():
    """Character of the 2-dimensional representation of S_3 from explicit matrices.

    S_3 acts on {x in Q^3 : sum x = 0} with basis e1-e2, e2-e3.
    """

    def matrix(perm):
        basis = [(1, -1, 0), (0, 1, -1)]
        cols = []
        for b in basis:
            img = [0, 0, 0]
            for i, c in enumerate(b):
                img[perm[i]] += c
            # express img = a*(1,-1,0) + b*(0,1,-1)
            a = img[0]
            bb = -img[2]
            cols.append((a, bb))
        return [[cols[0][0], cols[1][0]], [cols[0][1], cols[1][1]]]

    out = {}
    for perm in permutations(range(3)):
        m = matrix(perm)
        out.setdefault(cycle_type(perm), m[0][0] + m[1][1])
    return out


def hook_dimension(lam):
    """Number of standard Young tableaux by the hook length formula."""
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    return factorial(n) // hooks


def literal_d_component(i, terms):
    """D_i applied to {monomial (as partition): coeff} by the displayed formula:
    sum over ordered tuples (n_0..n_i) of positive ints of p_{sum} prod n_j d/dp_{n_j}."""
    out = Counter()
    for mono, c in terms.items():
        w = sum(mono)
        for tup in product(range(1, w + 1), repeat=i + 1):
            exps = Counter(mono)
            coeff = Fraction(c)
            ok = True
            for nj in tup:
                if exps[nj] == 0:
                    ok = False
                    break
                coeff *= nj * exps[nj]
                exps[nj] -= 1
            if not ok:
                continue
            exps[sum(tup)] += 1
            new = tuple(sorted((k for k, e in exps.items() for _ in range(e)), reverse=True))
            out[new] += coeff * Fraction((-1) ** i, factorial(i + 1))
    return {k: v for k, v in out.items() if v}


def phi_by_permutations(n, f):
    """Phi computed by sending each permutation to p_type / n!."""
    out = Counter()
    for perm in permutations(range(n)):
        lam = cycle_type(perm)
        if f.get(lam):
            out[lam] += Fraction(f[lam], factorial(n))
    return dict(out)
