"""The non-comparable pair count n(L) and the quantities bounding it."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import DistLattice
from .errors import TheoremViolation
from .structure import is_thick


@dataclass(frozen=True)
class Diamond:
    theta: int
    delta: int
    join: int
    meet: int

    @property
    def elements(self) -> frozenset[int]:
        return frozenset((self.theta, self.delta, self.join, self.meet))


@dataclass(frozen=True)
class InvariantRecord:
    size: int
    j_size: int
    n: int
    e: int
    f_vector: tuple[int, ...]
    f_sum: int
    lower_rank: int
    lower_edge: int
    upper: Fraction
    conjecture_rhs: int
    thick: bool


def lambda_f(L: DistLattice, delta: int) -> tuple[tuple[int, ...], int]:
    """Elements comparable to ``delta`` and their count."""
    members = tuple(int(i) for i in np.nonzero(L.comparable[delta])[0])
    return members, len(members)


def f_vector(L: DistLattice) -> tuple[int, ...]:
    return tuple(int(x) for x in L.comparable.sum(axis=1))


def _pair_scan(L: DistLattice) -> int:
    leq = L.leq
    count = 0
    for a in range(L.size):
        row = leq[a]
        col = leq[:, a]
        for b in range(a + 1, L.size):
            if not row[b] and not col[b]:
                count += 1
    return count


def identity_count(L: DistLattice) -> int:
    """(|L|^2 - sum of f) / 2, in exact integers."""
    twice = L.size * L.size - sum(f_vector(L))
    if twice % 2:
        raise TheoremViolation(f"|L|^2 - sum f is odd ({twice})")
    return twice // 2


def noncomparable_count(L: DistLattice) -> int:
    direct = _pair_scan(L)
    via_f = identity_count(L)
    if direct != via_f:
        raise TheoremViolation(f"pair scan gives {direct}, f-identity gives {via_f}")
    return direct


def enumerate_diamonds(L: DistLattice) -> list[Diamond]:
    out = []
    comp = L.comparable
    for a in range(L.size):
        for b in range(a + 1, L.size):
            if not comp[a, b]:
                out.append(Diamond(a, b, L.join(a, b), L.meet(a, b)))
    return out


def edge_count(L: DistLattice) -> int:
    return len(L.covers)


def bounds_report(L: DistLattice) -> InvariantRecord:
    """Every invariant and bound for ``L``; proved bounds are enforced."""
    size = L.size
    j = len(L.J)
    n = noncomparable_count(L)
    e = edge_count(L)
    fv = f_vector(L)
    rec = InvariantRecord(
        size=size,
        j_size=j,
        n=n,
        e=e,
        f_vector=fv,
        f_sum=sum(fv),
        lower_rank=size - j,
        lower_edge=e - size + 1,
        upper=Fraction((size - j) * size, 2),
        conjecture_rhs=e - j,
        thick=is_thick(L),
    )
    if not rec.lower_rank <= n:
        raise TheoremViolation(f"n = {n} < |L| - |J| = {rec.lower_rank}")
    if not rec.lower_edge <= n:
        raise TheoremViolation(f"n = {n} < e - |L| + 1 = {rec.lower_edge}")
    if not n <= rec.upper:
        raise TheoremViolation(f"n = {n} > (|L| - |J|)|L|/2 = {rec.upper}")
    if min(fv) < j:
        raise TheoremViolation(f"some f(d) = {min(fv)} < |J| = {j}")
    return rec
