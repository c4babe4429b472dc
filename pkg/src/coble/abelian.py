"""Exact integer linear algebra.

Smith and Hermite normal forms with transformation witnesses, integer
kernels, saturation, lattice intersections and finitely generated abelian
groups given by generators and relations.  Matrices are plain lists of
rows of Python ints, so there is no overflow at any size.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Optional, Sequence

IntMatrix = list[list[int]]


class AmbiguousSystemError(ValueError):
    """A consistent linear system whose solution is not unique."""


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def mat_mul(A: Sequence[Sequence], B: Sequence[Sequence], inner: Optional[int] = None,
            cols: Optional[int] = None) -> list[list]:
    """Product of two matrices given as row lists.

    ``inner`` and ``cols`` are only needed when a factor has no rows.
    """
    if inner is None:
        inner = len(B)
    if cols is None:
        cols = len(B[0]) if B else 0
    return [[sum(row[k] * B[k][j] for k in range(inner)) for j in range(cols)] for row in A]


def transpose(A: Sequence[Sequence], ncols: Optional[int] = None) -> list[list]:
    n = len(A[0]) if A else (ncols or 0)
    return [[row[j] for row in A] for j in range(n)]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y = g``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _shape(M: Sequence[Sequence], ncols: Optional[int]) -> tuple[int, int]:
    m = len(M)
    n = len(M[0]) if m else (ncols or 0)
    for i, row in enumerate(M):
        if len(row) != n:
            raise ValueError(f"row {i} has length {len(row)}, expected {n}")
    return m, n


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form ``U @ M @ V == D`` with unimodular witnesses.

    ``V_inv`` is the inverse of ``V``; its leading rows span the saturation
    of the row space of ``M``.
    """

    D: IntMatrix
    U: IntMatrix
    V: IntMatrix
    V_inv: IntMatrix
    elementary_divisors: list[int]

    @property
    def rank(self) -> int:
        return sum(1 for d in self.elementary_divisors if d)


def smith_normal_form(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> SnfResult:
    """Smith normal form by repeated minimum-pivot elimination.

    The pivot is the entry of smallest absolute value in the active
    submatrix, ties going to the leftmost column and then the topmost row,
    so the witnesses are reproducible.  Negative divisors are made positive
    by negating a column of ``V``.
    """
    m, n = _shape(M, ncols)
    A = [[int(x) for x in row] for row in M]
    U = identity(m)
    V = identity(n)
    Vi = identity(n)

    def swap_rows(i, j):
        if i != j:
            A[i], A[j] = A[j], A[i]
            U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        if i != j:
            for row in A:
                row[i], row[j] = row[j], row[i]
            for row in V:
                row[i], row[j] = row[j], row[i]
            Vi[i], Vi[j] = Vi[j], Vi[i]

    def add_row(src, dst, k):
        A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):
        for row in A:
            row[dst] += k * row[src]
        for row in V:
            row[dst] += k * row[src]
        Vi[src] = [a - k * b for a, b in zip(Vi[src], Vi[dst])]

    def min_pivot(t):
        best = None
        for j in range(t, n):
            for i in range(t, m):
                a = A[i][j]
                if a and (best is None or abs(a) < best[0]):
                    best = (abs(a), i, j)
        return None if best is None else best[1:]

    t = 0
    while t < min(m, n):
        piv = min_pivot(t)
        if piv is None:
            break
        while True:
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            p = A[t][t]
            clean = True
            for i in range(t + 1, m):
                q = A[i][t] // p
                if q:
                    add_row(t, i, -q)
                if A[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = A[t][j] // p
                if q:
                    add_col(t, j, -q)
                if A[t][j]:
                    clean = False
            if not clean:
                piv = min_pivot(t)
                continue
            bad = next((i for i in range(t + 1, m)
                        for j in range(t + 1, n) if A[i][j] % p), None)
            if bad is None:
                break
            # pull a non-multiple into row t; the next sweep leaves a smaller remainder
            add_row(bad, t, 1)
            piv = (t, t)
        t += 1

    for k in range(min(m, n)):
        if A[k][k] < 0:
            for row in A:
                row[k] = -row[k]
            for row in V:
                row[k] = -row[k]
            Vi[k] = [-x for x in Vi[k]]
    divisors = [A[k][k] for k in range(min(m, n))]
    return SnfResult(A, U, V, Vi, divisors)


def hermite_normal_form(rows: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Row-style Hermite normal form, zero rows dropped.

    Pivots are positive and entries above each pivot lie in ``[0, pivot)``,
    so two row lists span the same lattice iff their HNFs are equal.
    """
    m, n = _shape(rows, ncols)
    A = [[int(x) for x in row] for row in rows]
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if A[i][c]:
                a, b = A[r][c], A[i][c]
                g, x, y = xgcd(a, b)
                top = [x * u + y * v for u, v in zip(A[r], A[i])]
                A[i] = [(a // g) * v - (b // g) * u for u, v in zip(A[r], A[i])]
                A[r] = top
        if A[r][c] == 0:
            continue
        if A[r][c] < 0:
            A[r] = [-x for x in A[r]]
        p = A[r][c]
        for i in range(r):
            q = A[i][c] // p
            if q:
                A[i] = [u - q * v for u, v in zip(A[i], A[r])]
        r += 1
    return A[:r]


def kernel_basis(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Basis of ``{x in Z^n : M x = 0}`` in Hermite normal form."""
    m, n = _shape(M, ncols)
    snf = smith_normal_form(M, ncols=n)
    r = snf.rank
    vecs = [[snf.V[i][j] for i in range(n)] for j in range(r, n)]
    return hermite_normal_form(vecs, ncols=n)


def left_kernel_basis(M: Sequence[Sequence[int]], ncols: Optional[int] = None) -> IntMatrix:
    """Basis of ``{y : y M = 0}``; integer relations among the rows of ``M``."""
    m, _ = _shape(M, ncols)
    return kernel_basis(transpose(M, ncols), ncols=m)


@dataclass(frozen=True)
class Saturation:
    basis: IntMatrix
    index: int


def saturate(vectors: Sequence[Sequence[int]], ambient_rank: int) -> Saturation:
    """Smallest direct summand of ``Z^ambient_rank`` containing ``vectors``.

    ``index`` is the index of the span of ``vectors`` inside the result.
    """
    snf = smith_normal_form(vectors, ncols=ambient_rank)
    r = snf.rank
    index = 1
    for d in snf.elementary_divisors[:r]:
        index *= d
    return Saturation(hermite_normal_form(snf.V_inv[:r], ncols=ambient_rank), index)


def lattice_index(sub: Sequence[Sequence[int]], ambient_rank: int) -> int:
    """Index of the lattice spanned by ``sub`` in ``Z^ambient_rank``."""
    snf = smith_normal_form(sub, ncols=ambient_rank)
    if snf.rank != ambient_rank:
        raise ValueError("sublattice does not have full rank")
    index = 1
    for d in snf.elementary_divisors:
        index *= d
    return index


def in_row_lattice(rows: Sequence[Sequence[int]], vector: Sequence[int]) -> bool:
    """Whether ``vector`` is an integer combination of ``rows``."""
    return element_order(rows, vector) == 1


def element_order(rows: Sequence[Sequence[int]], vector: Sequence[int]) -> int:
    """Order of ``vector`` in ``Z^n / rowspan(rows)``; 0 means infinite."""
    n = len(vector)
    snf = smith_normal_form(rows, ncols=n)
    z = [sum(vector[k] * snf.V[k][j] for k in range(n)) for j in range(n)]
    order = 1
    for j in range(n):
        d = snf.elementary_divisors[j] if j < len(snf.elementary_divisors) else 0
        if d == 0:
            if z[j]:
                return 0
        else:
            order = lcm(order, d // gcd(d, z[j]))
    return order


def lattice_intersection(A: Sequence[Sequence[int]], B: Sequence[Sequence[int]],
                         ambient_rank: int) -> IntMatrix:
    """HNF basis of ``rowspan(A) ∩ rowspan(B)``."""
    if not A or not B:
        return []
    stacked = [list(r) for r in A] + [[-x for x in r] for r in B]
    rel = left_kernel_basis(stacked, ncols=ambient_rank)
    k = len(A)
    vecs = [[sum(y[i] * A[i][j] for i in range(k)) for j in range(ambient_rank)] for y in rel]
    return hermite_normal_form(vecs, ncols=ambient_rank)


def complement_basis(sub: Sequence[Sequence[int]], ambient_rank: int) -> IntMatrix:
    """Vectors completing a basis of the saturated lattice ``sub`` to one of ``Z^n``."""
    snf = smith_normal_form(sub, ncols=ambient_rank)
    if any(d not in (0, 1) for d in snf.elementary_divisors):
        raise ValueError("sublattice is not saturated")
    return [list(row) for row in snf.V_inv[snf.rank:]]


def integer_coordinates(basis: Sequence[Sequence[int]], vector: Sequence[int]) -> Optional[list[int]]:
    """Integer ``c`` with ``c @ basis == vector``, or None if there is none."""
    sol = solve_rational_linear(transpose(basis, len(vector)), list(vector))
    if sol is None or any(x.denominator != 1 for x in sol):
        return None
    return [int(x) for x in sol]


def solve_rational_linear(A: Sequence[Sequence], b: Sequence) -> Optional[list[Fraction]]:
    """Exact solution of ``A x = b`` over Q.

    Returns None when the system is inconsistent and raises
    :class:`AmbiguousSystemError` when it is consistent but underdetermined.
    """
    m = len(A)
    if len(b) != m:
        raise ValueError("right-hand side length does not match row count")
    n = len(A[0]) if m else 0
    M = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(A)]
    pivots = []
    r = 0
    for c in range(n):
        p = next((i for i in range(r, m) if M[i][c]), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        inv = 1 / M[r][c]
        M[r] = [x * inv for x in M[r]]
        for i in range(m):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [x - f * y for x, y in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
    if any(M[i][n] for i in range(r, m)):
        return None
    if r < n:
        raise AmbiguousSystemError(f"solution space has dimension {n - r}")
    x = [Fraction(0)] * n
    for i, c in enumerate(pivots):
        x[c] = M[i][n]
    return x


def rational_to_integer_rows(rows: Sequence[Sequence]) -> tuple[IntMatrix, int]:
    """Scale rational rows by their common denominator."""
    den = 1
    for row in rows:
        for x in row:
            den = lcm(den, Fraction(x).denominator)
    return [[int(Fraction(x) * den) for x in row] for row in rows], den


@dataclass(frozen=True)
class PresentedGroup:
    """Finitely generated abelian group ``Z^generators / rowspan(relations)``."""

    generators: tuple[str, ...]
    relations: tuple[tuple[int, ...], ...]
    rank: int = field(init=False)
    torsion: tuple[int, ...] = field(init=False)

    def __post_init__(self):
        n = len(self.generators)
        for i, row in enumerate(self.relations):
            if len(row) != n:
                raise ValueError(
                    f"relation {i} has {len(row)} coefficients for {n} generators")
        snf = smith_normal_form(self.relations, ncols=n)
        nonzero = [d for d in snf.elementary_divisors if d]
        object.__setattr__(self, "rank", n - len(nonzero))
        object.__setattr__(self, "torsion", tuple(d for d in nonzero if d > 1))

    def order(self, vector: Sequence[int]) -> int:
        """Order of an element; 0 for infinite order."""
        return element_order(self.relations, vector)

    def is_zero(self, vector: Sequence[int]) -> bool:
        return self.order(vector) == 1

    def describe(self) -> str:
        parts = [f"Z^{self.rank}"] if self.rank else []
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"


def present_group(generators: Sequence[str], relations: Sequence[Sequence[int]]) -> PresentedGroup:
    return PresentedGroup(tuple(generators), tuple(tuple(int(x) for x in r) for r in relations))
