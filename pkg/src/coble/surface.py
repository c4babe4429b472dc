"""Picard lattices of blown-up planes and Mumford intersection theory.

Classes are always stored in the basis of the smooth resolution ``V``.  A
class "on the contraction ``X``" is a representative in ``Pic(V)`` taken
modulo the boundary curves, which is how proper transforms identify the
two.  Nothing here checks that a class is effective or that a curve
configuration exists; that is the caller's responsibility.
"""

from __future__ import annotations

import re
from math import lcm
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .abelian import (
    PresentedGroup,
    complement_basis,
    hermite_normal_form,
    integer_coordinates,
    kernel_basis,
    lattice_index,
    lattice_intersection,
    present_group,
    saturate,
    solve_rational_linear,
)
from .qlattice import QuadLattice, gram_of, profile


@dataclass(frozen=True)
class DivisorClass:
    surface: str
    coefficients: tuple[Fraction, ...]

    def _check(self, other: "DivisorClass"):
        if not isinstance(other, DivisorClass):
            raise TypeError(f"cannot combine a divisor class with {type(other).__name__}")
        if other.surface != self.surface or len(other.coefficients) != len(self.coefficients):
            raise ValueError(f"cannot combine classes on {self.surface!r} and {other.surface!r}")

    def __add__(self, other):
        self._check(other)
        return DivisorClass(self.surface, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other):
        self._check(other)
        return DivisorClass(self.surface, tuple(a - b for a, b in zip(self.coefficients, other.coefficients)))

    def __neg__(self):
        return DivisorClass(self.surface, tuple(-a for a in self.coefficients))

    def __mul__(self, k):
        k = Fraction(k)
        return DivisorClass(self.surface, tuple(k * a for a in self.coefficients))

    __rmul__ = __mul__

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.coefficients)

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    def integer_vector(self) -> list[int]:
        if not self.is_integral:
            raise ValueError("class has non-integral coefficients")
        return [int(a) for a in self.coefficients]


def _integer_form(coeffs: Sequence[Fraction]) -> tuple[int, list[int]]:
    den = lcm(*(c.denominator for c in coeffs)) if coeffs else 1
    return den, [c.numerator * (den // c.denominator) for c in coeffs]


def make_class(surface: str, coefficients: Iterable) -> DivisorClass:
    return DivisorClass(surface, tuple(Fraction(c) for c in coefficients))


_TERM = re.compile(r"\s*([+-])?\s*(\d+(?:/\d+)?)?\s*\*?\s*([A-Za-z_][A-Za-z0-9_']*)\s*")


@dataclass(frozen=True)
class SurfaceModel:
    """Picard lattice of a smooth surface with a chosen boundary chain.

    ``boundary`` lists the curves to be contracted in chain order.
    ``classes`` holds further named classes usable in expressions.
    """

    name: str
    labels: tuple[str, ...]
    gram: tuple[tuple[int, ...], ...]
    canonical: Optional[DivisorClass] = None
    boundary: tuple[tuple[str, DivisorClass], ...] = ()
    classes: Mapping[str, DivisorClass] = field(default_factory=dict)

    def __post_init__(self):
        n = len(self.labels)
        if len(set(self.labels)) != n:
            raise ValueError("duplicate basis labels")
        if len(self.gram) != n or any(len(r) != n for r in self.gram):
            raise ValueError("Gram matrix size does not match basis")
        for i in range(n):
            for j in range(i):
                if self.gram[i][j] != self.gram[j][i]:
                    raise ValueError(f"Gram matrix not symmetric at {self.labels[i]}, {self.labels[j]}")

    @property
    def rank(self) -> int:
        return len(self.labels)

    @property
    def boundary_classes(self) -> list[DivisorClass]:
        return [c for _, c in self.boundary]

    def zero(self) -> DivisorClass:
        return make_class(self.name, [0] * self.rank)

    def basis_class(self, label: str) -> DivisorClass:
        try:
            i = self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown basis label {label!r}") from None
        return make_class(self.name, [int(j == i) for j in range(self.rank)])

    def lookup(self, name: str) -> DivisorClass:
        if name in self.labels:
            return self.basis_class(name)
        if name in self.classes:
            return self.classes[name]
        if name == "K" and self.canonical is not None:
            return self.canonical
        for bname, c in self.boundary:
            if bname == name:
                return c
        raise KeyError(f"unknown class or label {name!r}")

    def cls(self, expr: str) -> DivisorClass:
        """Parse an expression such as ``3H - 2E1 - R1`` into a class."""
        text = expr.strip()
        if not text:
            raise ValueError("empty class expression")
        pos = 0
        total = self.zero()
        first = True
        while pos < len(text):
            m = _TERM.match(text, pos)
            if not m or m.end() == pos or (not first and m.group(1) is None):
                raise ValueError(f"cannot parse class expression {expr!r} at {text[pos:]!r}")
            sign = -1 if m.group(1) == "-" else 1
            coef = Fraction(m.group(2)) if m.group(2) else Fraction(1)
            total = total + (sign * coef) * self.lookup(m.group(3))
            pos = m.end()
            first = False
        return total

    def pair(self, D: DivisorClass, F: DivisorClass) -> Fraction:
        """Intersection pairing on ``Pic(V)``."""
        for c in (D, F):
            if c.surface != self.name or len(c.coefficients) != self.rank:
                raise ValueError(f"class does not live on surface {self.name!r}")
        # clear denominators so the double sum runs on ints
        da, a = _integer_form(D.coefficients)
        db, b = _integer_form(F.coefficients)
        g = self.gram
        total = 0
        for i, x in enumerate(a):
            if x:
                row = g[i]
                total += x * sum(row[j] * y for j, y in enumerate(b) if y)
        return Fraction(total, da * db)

    def self_intersection(self, D: DivisorClass) -> Fraction:
        return self.pair(D, D)

    def format(self, D: DivisorClass) -> str:
        """Readable expression for a class, e.g. ``3H - 2E1 - R1``."""
        terms = []
        for lab, c in zip(self.labels, D.coefficients):
            if not c:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            coef = "" if mag == 1 else (f"{mag}" if mag.denominator == 1 else f"({mag})")
            terms.append((sign, f"{coef}{lab}"))
        if not terms:
            return "0"
        out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
        for sign, t in terms[1:]:
            out += f" {sign} {t}"
        return out

    def with_boundary(self, names: Sequence[str], classes: Optional[Mapping[str, DivisorClass]] = None
                      ) -> "SurfaceModel":
        extra = dict(self.classes)
        if classes:
            extra.update(classes)
        tmp = SurfaceModel(self.name, self.labels, self.gram, self.canonical, (), extra)
        return SurfaceModel(self.name, self.labels, self.gram, self.canonical,
                            tuple((n, tmp.lookup(n)) for n in names), extra)

    def with_classes(self, classes: Mapping[str, DivisorClass]) -> "SurfaceModel":
        extra = dict(self.classes)
        extra.update(classes)
        return SurfaceModel(self.name, self.labels, self.gram, self.canonical, self.boundary, extra)


def projective_plane(name: str = "P2") -> SurfaceModel:
    return SurfaceModel(name, ("H",), ((1,),), make_class(name, [-3]))


def _extend(D: Optional[DivisorClass], name: str) -> Optional[DivisorClass]:
    if D is None:
        return None
    return DivisorClass(name, D.coefficients + (Fraction(0),))


def blow_up_point(S: SurfaceModel, label: str, name: Optional[str] = None) -> SurfaceModel:
    """Blow up a point: a new ``(-1)``-class orthogonal to the old basis, ``K' = K + E``."""
    if label in S.labels:
        raise ValueError(f"label {label!r} already in use")
    name = name or S.name
    n = S.rank
    gram = tuple(row + (0,) for row in S.gram) + (tuple([0] * n + [-1]),)
    E = make_class(name, [0] * n + [1])
    K = _extend(S.canonical, name)
    K = K + E if K is not None else None
    boundary = tuple((b, _extend(c, name)) for b, c in S.boundary)
    classes = {k: _extend(c, name) for k, c in S.classes.items()}
    return SurfaceModel(name, S.labels + (label,), gram, K, boundary, classes)


def blow_up_points(S: SurfaceModel, labels: Iterable[str], name: Optional[str] = None) -> SurfaceModel:
    for label in labels:
        S = blow_up_point(S, label, name)
    return S


def proper_transform(S: SurfaceModel, D: DivisorClass,
                     assignments: Sequence[tuple[str, int]] = ()) -> DivisorClass:
    """``D - sum m_i E_i`` for the exceptional labels and multiplicities given."""
    for label, m in assignments:
        D = D - m * S.basis_class(label)
    return D


@dataclass(frozen=True)
class ContractedSurface:
    """Contraction ``X`` of the boundary chain of ``source``."""

    source: SurfaceModel
    class_group: PresentedGroup
    boundary_gram: tuple[tuple[Fraction, ...], ...]

    @property
    def s(self) -> int:
        return len(self.source.boundary)

    @property
    def boundary(self) -> list[DivisorClass]:
        return self.source.boundary_classes

    @cached_property
    def boundary_inverse(self) -> list[list[Fraction]]:
        """Inverse of the boundary Gram, by columns solved one at a time."""
        k = len(self.boundary_gram)
        cols = [solve_rational_linear(self.boundary_gram, [int(i == j) for i in range(k)])
                for j in range(k)]
        return [[cols[j][i] for j in range(k)] for i in range(k)]


def contract(S: SurfaceModel) -> ContractedSurface:
    """Contract the boundary; ``Cl(X) = Pic(V) / <boundary>``.

    The boundary Gram must be negative definite, which is what makes the
    Mumford pull-back unique.
    """
    if not S.boundary:
        raise ValueError("surface has no boundary to contract")
    B = S.boundary_classes
    rows = [b.integer_vector() for b in B]
    bg = tuple(tuple(S.pair(a, b) for b in B) for a in B)
    sig = profile(QuadLattice(tuple(f"c{i}" for i in range(len(B))), bg)).signature
    if sig != (0, len(B), 0):
        raise ValueError(f"boundary Gram is not negative definite (signature {sig})")
    return ContractedSurface(S, present_group(S.labels, rows), bg)


def mumford_coefficients(C: ContractedSurface, D: DivisorClass) -> list[Fraction]:
    """The ``mu_i`` making ``D + sum mu_i C_i`` orthogonal to every ``C_i``."""
    rhs = [-C.source.pair(D, c) for c in C.boundary]
    return [sum((x * r for x, r in zip(row, rhs)), Fraction(0)) for row in C.boundary_inverse]


def mumford_pullback(C: ContractedSurface, D: DivisorClass) -> DivisorClass:
    out = D
    for m, c in zip(mumford_coefficients(C, D), C.boundary):
        out = out + m * c
    return out


def mumford_pairing(C: ContractedSurface, D: DivisorClass, F: DivisorClass) -> Fraction:
    """Mumford's Q-valued intersection number on the contraction."""
    pd = mumford_pullback(C, D)
    pf = mumford_pullback(C, F)
    a = C.source.pair(pd, F)
    b = C.source.pair(D, pf)
    if a != b:
        raise AssertionError(f"pull-back pairing is not symmetric: {a} != {b}")
    return a


def parity_vector(C: ContractedSurface, D: DivisorClass) -> tuple[int, ...]:
    """``(D . C_i) mod 2`` for the first ``s - 1`` boundary curves."""
    if not D.is_integral:
        raise ValueError("parity is only defined for integral classes")
    return tuple(int(C.source.pair(D, c)) % 2 for c in C.boundary[:-1])


def _even_pairing_lattice(S: SurfaceModel, curves: Sequence[DivisorClass]) -> list[list[int]]:
    """HNF basis of ``{x in Pic(V) : x . c even for each curve}``."""
    n, k = S.rank, len(curves)
    if k == 0:
        return [[int(i == j) for j in range(n)] for i in range(n)]
    P = [[int(S.pair(c, S.basis_class(lab))) for lab in S.labels] for c in curves]
    # x . c_i + 2 y_i = 0
    aug = [P[i] + [2 * int(i == j) for j in range(k)] for i in range(k)]
    K = kernel_basis(aug, ncols=n + k)
    return hermite_normal_form([v[:n] for v in K], ncols=n)


@dataclass(frozen=True)
class GeneralFiberPicard:
    """Image of ``Pic(X_t)`` inside ``Cl(X)``.

    ``lattice`` is the free part with the Mumford Gram; ``basis`` holds the
    representatives in ``Pic(V)`` of its basis.  ``parity_kernel`` spans the
    classes with even pairing against every boundary curve, ``torsion``
    lists representatives of the torsion classes it contains (as a basis of
    the saturated boundary span inside it).
    """

    lattice: QuadLattice
    basis: tuple[DivisorClass, ...]
    parity_kernel: tuple[DivisorClass, ...]
    torsion_order: int
    torsion_span: tuple[DivisorClass, ...]
    index_in_class_group: int
    index_in_free_part: int

    def contains(self, D: DivisorClass) -> bool:
        v = D.integer_vector()
        rows = [c.integer_vector() for c in self.parity_kernel]
        return integer_coordinates(rows, v) is not None


def picard_of_general_fiber(C: ContractedSurface) -> GeneralFiberPicard:
    """Classes of ``Cl(X)`` whose proper transforms pair evenly with each ``C_i``.

    Raises ValueError when the boundary pairings are odd (the parity map
    would not descend to ``Cl(X)``) or when the parity against the last
    curve is not determined by the others.
    """
    S = C.source
    n = S.rank
    for row in C.boundary_gram:
        for x in row:
            if x.denominator != 1 or x % 2:
                raise ValueError("boundary pairings must be even for the parity map to descend")
    L = _even_pairing_lattice(S, C.boundary)
    if C.s > 1 and L != _even_pairing_lattice(S, C.boundary[:-1]):
        raise ValueError("parity against the last boundary curve is not determined by the others")
    brows = [c.integer_vector() for c in C.boundary]
    sat = saturate(brows, n).basis
    M = lattice_intersection(L, sat, n)
    coords_M = [integer_coordinates(L, v) for v in M]
    comp = complement_basis(coords_M, len(L))
    reps = [[sum(c[i] * L[i][j] for i in range(len(L))) for j in range(n)] for c in comp]
    basis = tuple(_int_class(S, v) for v in reps)
    lat = gram_of(list(basis), lambda a, b: mumford_pairing(C, a, b),
                  tuple(f"p{i}" for i in range(len(basis))))
    # torsion inside the image: M / <C_i>
    coords_B = [integer_coordinates(M, v) for v in brows]
    torsion_order = lattice_index(coords_B, len(M)) if M else 1
    idx_cl = lattice_index(L, n)
    idx_free = lattice_index(hermite_normal_form(L + sat, ncols=n), n)
    return GeneralFiberPicard(lat, basis, tuple(_int_class(S, v) for v in L), torsion_order,
                              tuple(_int_class(S, v) for v in M), idx_cl, idx_free)


def _int_class(S: SurfaceModel, v: Sequence[int]) -> DivisorClass:
    return make_class(S.name, v)
