"""Hirzebruch-Jung continued fractions and cyclic quotient singularities.

A chain ``[b1, ..., br]`` (all ``b_i >= 2``) stands for
``n/a = b1 - 1/(b2 - 1/(... - 1/br))``, the exceptional chain of the
minimal resolution of ``1/n(1, a)``.  T-singularities are the
``1/(d n^2)(1, d n a - 1)`` with ``gcd(n, a) = 1``; Wahl singularities are
the case ``d = 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, isqrt
from typing import Optional, Sequence


@dataclass(frozen=True)
class CyclicQuotient:
    """The cyclic quotient singularity ``1/n(1, a)``."""

    n: int
    a: int

    def __post_init__(self):
        if not (0 < self.a < self.n) or gcd(self.n, self.a) != 1:
            raise ValueError(f"invalid cyclic quotient 1/{self.n}(1,{self.a})")

    def __str__(self):
        return f"1/{self.n}(1,{self.a})"


def _check_chain(chain: Sequence[int]) -> Sequence[int]:
    if not chain or min(chain) < 2:
        raise ValueError(f"invalid Hirzebruch-Jung chain {list(chain)}")
    return chain


def hj_expand(n: int, a: int) -> list[int]:
    """Continued fraction of ``n/a`` for ``0 < a < n``, coprime; ``n/1`` gives ``[n]``."""
    if a == 1 and n >= 2:
        return [n]
    if not (0 < a < n) or gcd(n, a) != 1:
        raise ValueError(f"invalid cyclic quotient 1/{n}(1,{a})")
    chain = []
    while a:
        b = -(-n // a)
        chain.append(b)
        n, a = a, b * a - n
    return chain


def hj_evaluate(chain: Sequence[int]) -> Fraction:
    chain = _check_chain(chain)
    # b - q/p = (b p - q)/p; numerator and denominator stay coprime
    p, q = chain[-1], 1
    for b in reversed(chain[:-1]):
        p, q = b * p - q, p
    return Fraction(p, q)


def is_t_chain(chain: Sequence[int]) -> Optional[tuple[int, int, int]]:
    """``(d, n, a)`` when the chain resolves ``1/(d n^2)(1, d n a - 1)``, else None."""
    q = hj_evaluate(chain)
    N, A = q.numerator, q.denominator
    for n in range(isqrt(N), 1, -1):
        if N % (n * n):
            continue
        d = N // (n * n)
        if (A + 1) % (d * n):
            continue
        a = (A + 1) // (d * n)
        if 0 < a < n and gcd(n, a) == 1:
            return d, n, a
    return None


def is_wahl(chain: Sequence[int]) -> Optional[tuple[int, int]]:
    """``(n, a)`` when the chain resolves the Wahl singularity ``1/n^2(1, n a - 1)``."""
    t = is_t_chain(chain)
    if t is None or t[0] != 1:
        return None
    return t[1], t[2]


def t_chain_from_s(s: int) -> list[int]:
    """Chain of ``1/4s(1, 2s-1)``: ``[4]`` for ``s = 1``, else ``[3, 2, ..., 2, 3]``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    if s == 1:
        return [4]
    return [3] + [2] * (s - 2) + [3]


def wahl_family_chain(k: int) -> list[int]:
    """The k-th chain ``[2, ..., 2, 2k + 2]`` with ``2k - 2`` twos.

    Extrapolated from its first terms ``[4], [2,2,6], [2,2,2,2,8]``; the
    Wahl check below guards the pattern.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    chain = [2] * (2 * k - 2) + [2 * k + 2]
    assert is_wahl(chain) == (2 * k, 2 * k - 1), chain
    return chain


def milnor_rank(s: int) -> int:
    """Rank of the second homology of the Milnor fibre of ``1/4s(1, 2s-1)``."""
    if s < 1:
        raise ValueError("s must be at least 1")
    return s - 1


ADE_FAMILIES = ("A", "D", "E")
_ROOT_TERM = re.compile(r"^\s*(\d*)\s*([ADE])_?(\d+)\s*$")


def ade_rank(kind: str, index: int) -> int:
    if kind == "A" and index >= 1:
        return index
    if kind == "D" and index >= 4:
        return index
    if kind == "E" and index in (6, 7, 8):
        return index
    raise ValueError(f"invalid ADE type {kind}{index}")


def parse_root_type(text: str) -> list[tuple[str, int]]:
    """``"A7+2A1"`` -> ``[("A", 7), ("A", 1), ("A", 1)]``."""
    out = []
    for term in text.split("+"):
        m = _ROOT_TERM.match(term)
        if not m:
            raise ValueError(f"cannot parse root type {text!r}")
        mult = int(m.group(1) or 1)
        kind, idx = m.group(2), int(m.group(3))
        ade_rank(kind, idx)
        out.extend([(kind, idx)] * mult)
    return out


def root_configuration_rank(types) -> int:
    if isinstance(types, str):
        types = parse_root_type(types)
    return sum(ade_rank(k, i) for k, i in types)


@dataclass(frozen=True)
class SingConfiguration:
    """Singularities of a deformed surface.

    ``parts`` holds ``("A", k)`` for an ``A_k`` point and ``("T", q)`` for
    the T-singularity ``q``; ``smooth_points`` counts ``A_0`` entries that
    were dropped.
    """

    parts: tuple
    smooth_points: int = field(default=0, compare=False)

    def __str__(self):
        if not self.parts:
            return "{}"
        return "{" + ", ".join(f"A{p[1]}" if p[0] == "A" else str(p[1]) for p in self.parts) + "}"

    def ade_types(self) -> list[tuple[str, int]]:
        return [p for p in self.parts if p[0] != "T"]


def partitions(s: int) -> list[tuple[int, ...]]:
    """Partitions of ``s`` as non-increasing tuples, largest first part first."""
    out = []

    def rec(rest, cap, prefix):
        if rest == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(rest, cap), 0, -1):
            rec(rest - p, p, prefix + [p])

    rec(s, s, [])
    return out


def degeneration_candidates(s: int) -> list[SingConfiguration]:
    """Both configurations for every partition of ``s``, before deduplication."""
    if not 1 <= s <= 10:
        raise ValueError("s must lie between 1 and 10")
    out = []
    for e in partitions(s):
        ones = sum(1 for x in e if x == 1)
        a_parts = tuple(("A", x - 1) for x in e if x > 1)
        out.append(SingConfiguration(a_parts, ones))
        rest = e[1:]
        t = ("T", CyclicQuotient(4 * e[0], 2 * e[0] - 1))
        out.append(SingConfiguration((t,) + tuple(("A", x - 1) for x in rest if x > 1),
                                     sum(1 for x in rest if x == 1)))
    return out


def admissible_degenerations(s: int) -> list[SingConfiguration]:
    """Singularity configurations reachable from ``1/4s(1, 2s-1)``.

    For each partition ``e1 >= ... >= er`` of ``s``: all ``A_{e_i - 1}``, or
    the T-singularity ``1/4e1(1, 2e1 - 1)`` with ``A_{e_i - 1}`` for ``i >= 2``.
    Partitions come in reverse lexicographic order, duplicates are removed.
    """
    seen = set()
    out = []
    for c in degeneration_candidates(s):
        if c not in seen:
            seen.add(c)
            out.append(c)
    return out
