"""Exact rational quadratic lattices.

A :class:`QuadLattice` is a basis with a symmetric Gram matrix of
:class:`~fractions.Fraction` entries, optionally embedded in an ambient
rational vector space.  Signatures come from congruence diagonalization
over Q, never from floating point eigenvalues.

Recognition of the Enriques lattice ``U + E8(-1)`` is by profile alone:
an even unimodular indefinite lattice is determined up to isometry by its
rank and signature, so rank 10, signature (1, 9), even and determinant
``±1`` pins it down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Optional, Sequence

from .abelian import (
    hermite_normal_form,
    kernel_basis,
    rational_to_integer_rows,
    solve_rational_linear,
)

Gram = tuple[tuple[Fraction, ...], ...]


class NotIntegralError(ValueError):
    """Raised when a query needs an integral Gram matrix."""


def _as_gram(rows: Sequence[Sequence]) -> Gram:
    return tuple(tuple(Fraction(x) for x in row) for row in rows)


@dataclass(frozen=True)
class QuadLattice:
    """Lattice with exact Gram matrix.

    ``embedding`` holds the basis vectors in ambient coordinates when the
    lattice lives inside a larger space; ``parent_coords`` holds them in
    the basis of the lattice it was cut out of, if any.
    """

    labels: tuple[str, ...]
    gram: Gram
    embedding: Optional[tuple[tuple[Fraction, ...], ...]] = None
    parent_coords: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        n = len(self.labels)
        if len(self.gram) != n or any(len(row) != n for row in self.gram):
            raise ValueError("Gram matrix size does not match the number of labels")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at ({i}, {j})")
        if self.embedding is not None and len(self.embedding) != n:
            raise ValueError("embedding has the wrong number of vectors")

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def integral(self) -> bool:
        return all(x.denominator == 1 for row in self.gram for x in row)

    def pair(self, x: Sequence, y: Sequence) -> Fraction:
        """Pairing of two coordinate vectors in this lattice's basis."""
        n = self.rank
        return sum((Fraction(x[i]) * self.gram[i][j] * y[j]
                    for i in range(n) for j in range(n) if x[i] and y[j]), Fraction(0))


def lattice(gram: Sequence[Sequence], labels: Optional[Sequence[str]] = None,
            embedding=None) -> QuadLattice:
    n = len(gram)
    labels = tuple(labels) if labels is not None else tuple(f"v{i}" for i in range(n))
    emb = None if embedding is None else tuple(tuple(Fraction(x) for x in v) for v in embedding)
    return QuadLattice(labels, _as_gram(gram), emb)


def gram_of(classes: Sequence, pairing: Callable, labels: Optional[Sequence[str]] = None) -> QuadLattice:
    """Gram matrix of divisor classes under a symmetric bilinear pairing.

    All classes must live on the same surface; their coefficient vectors
    become the embedding.
    """
    refs = {c.surface for c in classes}
    if len(refs) > 1:
        raise ValueError(f"classes come from different surfaces: {sorted(refs)}")
    n = len(classes)
    g = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            g[i][j] = g[j][i] = Fraction(pairing(classes[i], classes[j]))
    emb = [c.coefficients for c in classes]
    return lattice(g, labels, emb)


def hyperbolic_plane() -> QuadLattice:
    return lattice([[0, 1], [1, 0]], ("u0", "u1"))


def e8_cartan(negative: bool = True) -> QuadLattice:
    """E8 Cartan matrix (Bourbaki numbering), negated by default."""
    edges = [(0, 2), (1, 3), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)]
    s = -1 if negative else 1
    g = [[2 * s if i == j else 0 for j in range(8)] for i in range(8)]
    for i, j in edges:
        g[i][j] = g[j][i] = -s
    return lattice(g, tuple(f"e{i}" for i in range(8)))


def direct_sum(*lats: QuadLattice) -> QuadLattice:
    n = sum(L.rank for L in lats)
    g = [[Fraction(0)] * n for _ in range(n)]
    labels = []
    off = 0
    for L in lats:
        for i in range(L.rank):
            for j in range(L.rank):
                g[off + i][off + j] = L.gram[i][j]
        labels.extend(L.labels)
        off += L.rank
    return lattice(g, labels)


def determinant(M: Sequence[Sequence]) -> Fraction:
    A = [[Fraction(x) for x in row] for row in M]
    n = len(A)
    det = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if A[i][c]), None)
        if p is None:
            return Fraction(0)
        if p != c:
            A[c], A[p] = A[p], A[c]
            det = -det
        det *= A[c][c]
        for i in range(c + 1, n):
            if A[i][c]:
                f = A[i][c] / A[c][c]
                A[i] = [x - f * y for x, y in zip(A[i], A[c])]
    return det


def congruence_diagonal(gram: Sequence[Sequence]) -> list[Fraction]:
    """Diagonal of a matrix congruent to ``gram`` over Q.

    Symmetric elimination on the first available nonzero diagonal pivot.
    When the remaining diagonal is zero but some off-diagonal entry
    ``a_ij`` is not, row and column ``j`` are added to ``i``, which leaves
    ``2 a_ij`` on the diagonal.
    """
    A = [[Fraction(x) for x in row] for row in gram]
    n = len(A)
    diag = []
    k = 0
    while k < n:
        p = next((i for i in range(k, n) if A[i][i]), None)
        if p is None:
            pair = next(((i, j) for i in range(k, n) for j in range(i + 1, n) if A[i][j]), None)
            if pair is None:
                diag.extend(Fraction(0) for _ in range(k, n))
                break
            i, j = pair
            A[i] = [x + y for x, y in zip(A[i], A[j])]
            for row in A:
                row[i] += row[j]
            p = i
        A[k], A[p] = A[p], A[k]
        for row in A:
            row[k], row[p] = row[p], row[k]
        piv = A[k][k]
        for i in range(k + 1, n):
            if A[i][k]:
                f = A[i][k] / piv
                A[i] = [x - f * y for x, y in zip(A[i], A[k])]
                for row in A:
                    row[i] -= f * row[k]
        diag.append(piv)
        k += 1
    return diag


@dataclass(frozen=True)
class LatticeProfile:
    rank: int
    signature: tuple[int, int, int]
    even: Optional[bool]
    discriminant: Fraction

    @property
    def unimodular(self) -> bool:
        return abs(self.discriminant) == 1


def is_even(L: QuadLattice) -> bool:
    if not L.integral:
        raise NotIntegralError("evenness is only defined for an integral Gram matrix")
    return all(L.gram[i][i] % 2 == 0 for i in range(L.rank))


def profile(L: QuadLattice) -> LatticeProfile:
    """Rank, signature ``(pos, neg, zero)``, parity and determinant.

    ``even`` is None when the Gram matrix is not integral; call
    :func:`is_even` to get an error instead.
    """
    d = congruence_diagonal(L.gram)
    sig = (sum(1 for x in d if x > 0), sum(1 for x in d if x < 0), sum(1 for x in d if x == 0))
    even = is_even(L) if L.integral else None
    return LatticeProfile(L.rank, sig, even, determinant(L.gram))


def coordinates_in(L: QuadLattice, vector: Sequence) -> Optional[list[Fraction]]:
    """Rational coordinates of an ambient vector in the basis of ``L``."""
    if L.embedding is None:
        raise ValueError("lattice has no ambient embedding")
    if L.rank == 0:
        return [] if not any(vector) else None
    cols = [[L.embedding[i][j] for i in range(L.rank)] for j in range(len(vector))]
    return solve_rational_linear(cols, list(vector))


def orthogonal_complement(L: QuadLattice, targets: Sequence[Sequence]) -> QuadLattice:
    """Saturated sublattice of ``L`` orthogonal to every target.

    Targets are coordinate vectors over the basis of ``L`` (rational
    entries allowed).  The returned lattice records its basis in
    ``parent_coords`` and, if ``L`` is embedded, in ambient coordinates.
    """
    n = L.rank
    rows = [[sum((Fraction(t[i]) * L.gram[i][j] for i in range(n)), Fraction(0))
             for j in range(n)] for t in targets]
    int_rows, _ = rational_to_integer_rows(rows)
    B = kernel_basis(int_rows, ncols=n) if int_rows else [
        [int(i == j) for j in range(n)] for i in range(n)]
    return sublattice(L, B)


def sublattice(L: QuadLattice, coords: Sequence[Sequence[int]], prefix: str = "w") -> QuadLattice:
    """Lattice spanned by integer combinations of the basis of ``L``."""
    k = len(coords)
    g = [[L.pair(coords[i], coords[j]) for j in range(k)] for i in range(k)]
    emb = None
    if L.embedding is not None:
        amb = len(L.embedding[0]) if L.embedding else 0
        emb = tuple(tuple(sum((c[i] * L.embedding[i][a] for i in range(L.rank)), Fraction(0))
                          for a in range(amb)) for c in coords)
    return QuadLattice(tuple(f"{prefix}{i}" for i in range(k)), _as_gram(g), emb,
                       tuple(tuple(int(x) for x in c) for c in coords))


def normalized(L: QuadLattice) -> QuadLattice:
    """Same lattice on the Hermite-normal-form basis of its embedding.

    Two embedded lattices are equal iff their normalized embeddings agree;
    the Gram matrices then agree too when the pairing is the same.
    """
    if L.embedding is None:
        raise ValueError("lattice has no ambient embedding")
    amb = len(L.embedding[0]) if L.embedding else 0
    ints, den = rational_to_integer_rows(L.embedding)
    H = hermite_normal_form(ints, ncols=amb)
    if len(H) != L.rank:
        raise ValueError("embedding vectors are linearly dependent")
    new_emb = [[Fraction(x, den) for x in row] for row in H]
    C = [coordinates_in(L, v) for v in new_emb]
    g = [[L.pair(C[i], C[j]) for j in range(L.rank)] for i in range(L.rank)]
    return lattice(g, tuple(f"h{i}" for i in range(L.rank)), new_emb)


def same_lattice(A: QuadLattice, B: QuadLattice) -> bool:
    """Equal span with identical Gram after basis normalization."""
    na, nb = normalized(A), normalized(B)
    return na.embedding == nb.embedding and na.gram == nb.gram


def is_enriques_lattice(L: QuadLattice) -> tuple[bool, dict]:
    """Profile test for ``U + E8(-1)``: rank 10, even, ``|det| = 1``, signature (1, 9)."""
    if not L.integral:
        raise NotIntegralError("Enriques lattice recognition needs an integral Gram matrix")
    p = profile(L)
    checks = {
        "rank": p.rank == 10,
        "even": bool(p.even),
        "unimodular": p.unimodular,
        "signature": p.signature == (1, 9, 0),
    }
    report = {"profile": p, "checks": checks}
    return all(checks.values()), report


def t_graph(p: int, q: int, r: int) -> tuple[int, list[tuple[int, int]]]:
    """The tree ``T_{p,q,r}``: three arms of ``p, q, r`` nodes sharing the centre node 0."""
    edges = []
    nxt = 1
    for arm in (p, q, r):
        prev = 0
        for _ in range(arm - 1):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return nxt, edges


def path_graph(n: int) -> tuple[int, list[tuple[int, int]]]:
    return n, [(i, i + 1) for i in range(n - 1)]


def _graphs_isomorphic(n: int, adj_a: list[set], adj_b: list[set]) -> bool:
    if sorted(map(len, adj_a)) != sorted(map(len, adj_b)):
        return False
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def extend(i: int) -> bool:
        if i == n:
            return True
        for v in range(n):
            if v in used or len(adj_b[v]) != len(adj_a[i]):
                continue
            if all((mapping[u] in adj_b[v]) == (u in adj_a[i]) for u in range(i)):
                mapping[i] = v
                used.add(v)
                if extend(i + 1):
                    return True
                del mapping[i]
                used.discard(v)
        return False

    return extend(0)


def matches_tree_cartan(L: QuadLattice, tree: tuple[int, list[tuple[int, int]]]) -> bool:
    """Whether ``L`` is a negated Cartan matrix whose Dynkin graph is ``tree``.

    All diagonal entries must be -2 and off-diagonal entries 0 or 1; the
    graph on entries equal to 1 is then matched against ``tree`` by
    backtracking search.
    """
    n, edges = tree
    if L.rank != n:
        return False
    adj = [set() for _ in range(n)]
    for i, j in combinations(range(n), 2):
        x = L.gram[i][j]
        if x not in (0, 1):
            return False
        if x == 1:
            adj[i].add(j)
            adj[j].add(i)
    if any(L.gram[i][i] != -2 for i in range(n)):
        return False
    tadj = [set() for _ in range(n)]
    for i, j in edges:
        tadj[i].add(j)
        tadj[j].add(i)
    if sum(map(len, adj)) != sum(map(len, tadj)):
        return False
    return _graphs_isomorphic(n, adj, tadj)
