"""Brute-force reference computations, independent of the package code paths."""

from fractions import Fraction
from itertools import combinations
from math import gcd


def det(M):
    """Cofactor-free determinant by exact Fraction elimination."""
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    sign = 1
    out = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            sign = -sign
        out *= A[c][c]
        for i in range(c + 1, n):
            f = A[i][c] / A[c][c]
            A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return sign * out


def rank(M):
    A = [[Fraction(x) for x in row] for row in M]
    r = 0
    ncols = len(A[0]) if A else 0
    for c in range(ncols):
        p = next((i for i in range(r, len(A)) if A[i][c] != 0), None)
        if p is None:
            continue
        A[r], A[p] = A[p], A[r]
        for i in range(len(A)):
            if i != r and A[i][c]:
                f = A[i][c] / A[r][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


def determinantal_divisors(M):
    """d_1 ... d_k = gcd of all k x k minors."""
    m = len(M)
    n = len(M[0]) if m else 0
    out = []
    for k in range(1, min(m, n) + 1):
        g = 0
        for rows in combinations(range(m), k):
            for cols in combinations(range(n), k):
                g = gcd(g, int(det([[M[i][j] for j in cols] for i in rows])))
        out.append(g)
    return out


def elementary_divisors_from_minors(M):
    """Invariant factors d_k = D_k / D_{k-1}, zeros trailing."""
    D = determinantal_divisors(M)
    out = []
    prev = 1
    for g in D:
        if g == 0:
            out.append(0)
        else:
            out.append(g // prev)
            prev = g
    return out


def hj_value(chain):
    """Continued fraction by plain Fraction arithmetic."""
    x = Fraction(chain[-1])
    for b in reversed(chain[:-1]):
        x = b - 1 / x
    return x


def in_rational_span(rows, v):
    return rank(list(rows) + [list(v)]) == rank(rows)
