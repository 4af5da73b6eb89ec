"""Exact rational linear algebra for small dense matrices.

Float entries are binary rationals, so converting them to ``Fraction`` loses
nothing; rank, null spaces and determinants computed here involve no
tolerance at all. The dependency-list enumeration leans on this module for
its yes/no decisions, while the numpy SVD path remains the fast numeric
view used everywhere else.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm

import numpy as np


def as_fraction_rows(a) -> list[list[Fraction]]:
    arr = np.asarray(a)
    if arr.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    return [[Fraction(x) for x in row] for row in arr.tolist()]


def _rref(rows: list[list[Fraction]]) -> list[int]:
    """Reduce in place, returning the pivot column indices."""
    m = len(rows)
    n = len(rows[0]) if m else 0
    pivots: list[int] = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, m) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [x / pv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    return pivots


def exact_rank(a) -> int:
    return len(_rref(as_fraction_rows(a)))


def exact_nullspace(a) -> list[list[int]]:
    """Integer basis of the right null space {x : A x = 0}.

    Returns one length-n integer vector per null-space dimension, each
    scaled to be primitive (content 1). Empty list when A is injective.
    """
    rows = as_fraction_rows(a)
    ncols = len(rows[0]) if rows else 0
    pivots = _rref(rows)
    pivot_set = set(pivots)
    basis: list[list[int]] = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -rows[i][free]
        basis.append(_primitive(vec))
    return basis


def exact_left_nullspace(a) -> list[list[int]]:
    """Integer basis of {y : yᵀ A = 0}."""
    return exact_nullspace(np.asarray(a).T)


def _primitive(vec: list[Fraction]) -> list[int]:
    denom = lcm(*(x.denominator for x in vec)) if vec else 1
    ints = [int(x * denom) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return [x // g for x in ints] if g > 1 else ints


def int_det(m: list[list[int]]) -> int:
    """Determinant of an integer matrix by fraction-free Bareiss elimination."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            pr = next((i for i in range(k + 1, n) if a[i][k] != 0), None)
            if pr is None:
                return 0
            a[k], a[pr] = a[pr], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * (a[-1][-1] if n else 1)


def fraction_det(m) -> Fraction:
    """Exact determinant of a rational (or float-entried) square matrix."""
    a = as_fraction_rows(m)
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix must be square")
    det = Fraction(1)
    for k in range(n):
        pr = next((i for i in range(k, n) if a[i][k] != 0), None)
        if pr is None:
            return Fraction(0)
        if pr != k:
            a[k], a[pr] = a[pr], a[k]
            det = -det
        det *= a[k][k]
        inv = 1 / a[k][k]
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[k])]
    return det
