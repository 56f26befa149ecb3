"""Concatenation structure of distributive lattices.

``L1 # L2`` glues the top of ``L1`` to the bottom of ``L2``.  A lattice is
thick when every element other than the bounds has a non-comparable partner;
thick lattices are exactly the ones that do not split as a concatenation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .core import (
    DistLattice,
    Poset,
    _from_tables,
    build_partial_order,
    canonical_isomorphic,
    induced_sublattice,
    validate_distributive_lattice,
)
from .errors import NotMaximalJoinIrreducible

TWO_CHAIN = "two_chain"
DIAMOND = "diamond"
OTHER = "other"


@dataclass(frozen=True)
class Decomposition:
    factors: tuple[DistLattice, ...]
    cut_elements: tuple[int, ...]
    embeddings: tuple[tuple[int, ...], ...]


@lru_cache(maxsize=None)
def diamond_lattice() -> DistLattice:
    p = build_partial_order([], [("top", "a"), ("top", "b"), ("a", "bot"), ("b", "bot")])
    return validate_distributive_lattice(p)


def chain_lattice(k: int, prefix: str = "c") -> DistLattice:
    names = [f"{prefix}{i}" for i in range(k)]
    covers = [(names[i + 1], names[i]) for i in range(k - 1)]
    return validate_distributive_lattice(build_partial_order(names, covers))


def central_elements(L: DistLattice) -> tuple[int, ...]:
    """Interior elements comparable to every element, bottom to top."""
    full = L.comparable.all(axis=1)
    ids = [i for i in range(L.size) if full[i] and i not in (L.bottom, L.top)]
    return tuple(sorted(ids, key=lambda i: int(L.leq[:, i].sum())))


def is_thick(L: DistLattice) -> bool:
    return not central_elements(L)


def decompose_thick(L: DistLattice) -> Decomposition:
    """Split ``L`` at every central element into thick interval factors."""
    cuts = central_elements(L)
    if L.size == 1:
        return Decomposition((L,), (), ((L.bottom,),))
    points = (L.bottom,) + cuts + (L.top,)
    factors = []
    embeddings = []
    for lo, hi in zip(points, points[1:]):
        ids = tuple(i for i in range(L.size) if L.leq[lo, i] and L.leq[i, hi])
        factors.append(induced_sublattice(L, ids))
        embeddings.append(ids)
    return Decomposition(tuple(factors), cuts, tuple(embeddings))


def concatenate(L1: DistLattice, L2: DistLattice) -> DistLattice:
    """``L1 # L2``.  Names of ``L2`` clashing with ``L1`` get a ``'`` suffix."""
    n1 = L1.size
    rest = [x for x in range(L2.size) if x != L2.bottom]
    n = n1 + len(rest)
    where = np.empty(L2.size, dtype=np.int64)
    where[L2.bottom] = L1.top
    for k, x in enumerate(rest):
        where[x] = n1 + k

    names = list(L1.names)
    taken = set(names)
    for x in rest:
        nm = L2.name(x)
        while nm in taken:
            nm += "'"
        taken.add(nm)
        names.append(nm)

    leq = np.zeros((n, n), dtype=bool)
    leq[:n1, :n1] = L1.leq
    leq[:n1, n1:] = True
    join = np.empty((n, n), dtype=np.int64)
    meet = np.empty((n, n), dtype=np.int64)
    join[:n1, :n1] = L1.join_table
    meet[:n1, :n1] = L1.meet_table
    lo = np.arange(n1)[:, None]
    hi = np.arange(n1, n)[None, :]
    join[:n1, n1:] = hi
    join[n1:, :n1] = hi.T
    meet[:n1, n1:] = lo
    meet[n1:, :n1] = lo.T
    r = np.array(rest, dtype=np.int64)
    if len(rest):
        leq[n1:, n1:] = L2.leq[np.ix_(r, r)]
        join[n1:, n1:] = where[L2.join_table[np.ix_(r, r)]]
        meet[n1:, n1:] = where[L2.meet_table[np.ix_(r, r)]]
    return _from_tables(Poset.from_leq(names, leq), join, meet)


def concatenate_all(factors) -> DistLattice:
    factors = list(factors)
    out = factors[0]
    for f in factors[1:]:
        out = concatenate(out, f)
    return out


def maximal_join_irreducibles(L: DistLattice) -> tuple[int, ...]:
    nonzero = [j for j in L.J if j != L.bottom]
    return tuple(
        a for a in nonzero if not any(b != a and L.leq[a, b] for b in nonzero)
    )


def prune(L: DistLattice, alpha: int) -> DistLattice:
    """Remove every element above the maximal join irreducible ``alpha``."""
    if alpha not in maximal_join_irreducibles(L):
        raise NotMaximalJoinIrreducible(
            f"{L.name(alpha)} is not a maximal nonzero join irreducible"
        )
    keep = [x for x in range(L.size) if not L.leq[alpha, x]]
    return induced_sublattice(L, keep)


def classify_factor(F: DistLattice) -> str:
    if F.size == 2:
        return TWO_CHAIN
    if F.size == 4 and canonical_isomorphic(F, diamond_lattice()):
        return DIAMOND
    return OTHER


def classify_ci_shape(L: DistLattice) -> tuple[bool, list[str]]:
    """Is ``L`` a concatenation of diamonds and chains?  Also the factor kinds.

    The one-element lattice is the empty concatenation: ``(True, [])``.
    """
    if L.size == 1:
        return True, []
    kinds = [classify_factor(F) for F in decompose_thick(L).factors]
    return all(k != OTHER for k in kinds), kinds
