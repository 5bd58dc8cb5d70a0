"""Independent dense-matrix oracle for the star-multiplication table.

Builds the table with sympy symbolic matrices: 1D indexing of the basis,
hand-coded hyperplane action, dense matrix recurrences.  It shares no code
with the package under test, so agreement with the sparse implementation is
a real cross-check.

To (re)write the frozen golden files, invoke explicitly:

    python -m tests.oracles.make_golden
"""

from __future__ import annotations

import math

from sympy import Symbol, eye, zeros

q1 = Symbol("q1")
q2 = Symbol("q2")


def coeffij(k, n):
    """1-based linear position k -> pair (i, j)."""
    i = math.ceil(k / (n - 1))
    if k - (i - 1) * (n - 1) < i:
        j = k - (i - 1) * (n - 1)
    else:
        j = k + 1 - (i - 1) * (n - 1)
    return [i, j]


def invcoeffij(i, j, n):
    """Pair (i, j) -> 0-based linear position."""
    if j > i:
        t = (i - 1) * (n - 1) + j - 1
    else:
        t = (i - 1) * (n - 1) + j
    return t - 1


def h1_matrix(n):
    h1 = zeros(n * (n - 1))
    # column (1, n)
    h1[invcoeffij(n - 1, n, n), invcoeffij(1, n, n)] = q1
    h1[invcoeffij(n, 1, n), invcoeffij(1, n, n)] = q1 * q2
    h1[invcoeffij(n - 1, 1, n), invcoeffij(1, n, n)] = -q1 * q2
    # columns (1, p), p < n
    for p in range(2, n):
        h1[invcoeffij(n, p, n), invcoeffij(1, p, n)] = q1
    # column (2, 1)
    h1[invcoeffij(1, 2, n), invcoeffij(2, 1, n)] = 1
    h1[invcoeffij(n, 1, n), invcoeffij(2, 1, n)] = q1
    h1[invcoeffij(n, 2, n), invcoeffij(2, 1, n)] = -q1
    # columns (p+1, p), p >= 2
    for p in range(2, n):
        h1[invcoeffij(p - 1, p, n), invcoeffij(p + 1, p, n)] = 1
        h1[invcoeffij(p, p + 1, n), invcoeffij(p + 1, p, n)] = 1
        h1[invcoeffij(p - 1, p + 1, n), invcoeffij(p + 1, p, n)] = -1
    # remaining columns
    for k in range(2, n + 1):
        for p in range(1, n + 1):
            if k != p + 1 and k != p:
                h1[invcoeffij(k - 1, p, n), invcoeffij(k, p, n)] = 1
    return h1


def h2_matrix(n):
    h2 = zeros(n * (n - 1))
    # column (1, n)
    h2[invcoeffij(1, 2, n), invcoeffij(1, n, n)] = q2
    h2[invcoeffij(n, 1, n), invcoeffij(1, n, n)] = q1 * q2
    h2[invcoeffij(n, 2, n), invcoeffij(1, n, n)] = -q1 * q2
    # columns (k, n), 1 < k < n
    for k in range(2, n):
        h2[invcoeffij(k, 1, n), invcoeffij(k, n, n)] = q2
    # column (n, n-1)
    h2[invcoeffij(n - 1, n, n), invcoeffij(n, n - 1, n)] = 1
    h2[invcoeffij(n, 1, n), invcoeffij(n, n - 1, n)] = q2
    h2[invcoeffij(n - 1, 1, n), invcoeffij(n, n - 1, n)] = -q2
    # columns (p+1, p), p <= n-2
    for p in range(1, n - 1):
        h2[invcoeffij(p, p + 1, n), invcoeffij(p + 1, p, n)] = 1
        h2[invcoeffij(p + 1, p + 2, n), invcoeffij(p + 1, p, n)] = 1
        h2[invcoeffij(p, p + 2, n), invcoeffij(p + 1, p, n)] = -1
    # remaining columns
    for p in range(1, n):
        for k in range(1, n + 1):
            if k != p + 1 and k != p:
                h2[invcoeffij(k, p + 1, n), invcoeffij(k, p, n)] = 1
    return h2


def reference_operators(n):
    """List of n(n-1) multiplication matrices, in linear basis order."""
    size = n * (n - 1)
    ops = [None] * size
    ops[invcoeffij(n, 1, n)] = eye(size)
    a = h1_matrix(n)
    b = h2_matrix(n)
    j = b - eye(size)
    for k in range(1, n - 1):
        ops[invcoeffij(n - k, 1, n)] = a * ops[invcoeffij(n - k + 1, 1, n)]
    for k in range(2, n + 1):
        for p in range(2, k):
            ops[invcoeffij(k, p, n)] = b * ops[invcoeffij(k, p - 1, n)]
    ops[invcoeffij(1, 2, n)] = a * ops[invcoeffij(2, 1, n)] + q1 * j
    for p in range(2, n):
        ops[invcoeffij(p, p + 1, n)] = (
            a * ops[invcoeffij(p + 1, p, n)] + j * ops[invcoeffij(p - 1, p, n)]
        )
    for p in range(3, n + 1):
        for k in range(2, p):
            ops[invcoeffij(p - k, p, n)] = a * ops[invcoeffij(p - k + 1, p, n)]
    return ops


def reference_table_json(n):
    """Golden-file dict: every nonzero structure constant of the table."""
    ops = reference_operators(n)
    size = n * (n - 1)
    entries = []
    for iu in range(size):
        u = coeffij(iu + 1, n)
        mat = ops[iu].expand()
        for iv in range(size):
            v = coeffij(iv + 1, n)
            for iw in range(size):
                poly = mat[iw, iv]
                if poly == 0:
                    continue
                w = coeffij(iw + 1, n)
                terms = []
                for (d1, d2), c in sorted(poly.as_poly(q1, q2).terms()):
                    terms.append({"d1": int(d1), "d2": int(d2), "coeff": int(c)})
                entries.append({"u": u, "v": v, "w": w, "poly": terms})
    return {"n": n, "entries": entries}
