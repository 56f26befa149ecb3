"""Finite posets and distributive lattices.

Elements are dense integer indices ``0..size-1``; human-readable names ride
along in ``Poset.names``.  Relations are numpy boolean matrices with the
convention ``leq[a, b] == True`` iff ``a <= b``.

Join irreducibles: ``J`` is the set of elements with at most one lower cover,
so the bottom element belongs to ``J``.  With that convention every maximal
chain of ``L`` has exactly ``|J|`` elements and the diamond has ``|J| = 3``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from . import canon
from .errors import (
    CycleDetected,
    DuplicateName,
    LatticeError,
    NotACover,
    NotALattice,
    NotDistributive,
    SizeLimitExceeded,
)

DEFAULT_MAX_ELEMENTS = 1 << 20


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def transitive_closure(rel: np.ndarray) -> np.ndarray:
    """Reflexive-transitive closure (Warshall) of a boolean relation matrix."""
    n = rel.shape[0]
    c = rel.copy() | np.eye(n, dtype=bool)
    for k in range(n):
        c |= np.outer(c[:, k], c[k, :])
    return c


def transitive_reduction(leq: np.ndarray) -> np.ndarray:
    """Cover matrix ``cov[hi, lo]`` of a partial order given by ``leq``."""
    n = leq.shape[0]
    strict = leq & ~np.eye(n, dtype=bool)
    s = strict.astype(np.float32)
    # lo < z < hi for some z
    through = (s @ s) > 0
    return (strict & ~through).T


@dataclass(frozen=True, eq=False)
class Poset:
    names: tuple[str, ...]
    leq: np.ndarray
    covers: tuple[tuple[int, int], ...]
    redundant_covers: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_leq(cls, names, leq, redundant_covers=()) -> "Poset":
        leq = np.array(leq, dtype=bool)
        cov = transitive_reduction(leq)
        covers = tuple((int(a), int(b)) for a, b in zip(*np.nonzero(cov)))
        return cls(tuple(names), _freeze(leq), covers, tuple(redundant_covers))

    @property
    def size(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        return self._index[name]

    @cached_property
    def _index(self) -> dict[str, int]:
        return {nm: i for i, nm in enumerate(self.names)}

    @cached_property
    def below_masks(self) -> tuple[int, ...]:
        """``below[i]``: bitmask of elements strictly below ``i``."""
        out = []
        for i in range(self.size):
            m = 0
            for j in np.nonzero(self.leq[:, i])[0]:
                if j != i:
                    m |= 1 << int(j)
            out.append(m)
        return tuple(out)

    @cached_property
    def code(self) -> str:
        return canon.poset_code(self.size, self.below_masks)

    def __repr__(self):
        return f"Poset(size={self.size}, covers={len(self.covers)})"


def build_partial_order(names, cover_pairs) -> Poset:
    """Build a poset from declared names and ``(upper, lower)`` cover pairs.

    Names first seen in ``cover_pairs`` are declared implicitly, in order of
    appearance.  Pairs already implied by transitivity are accepted and
    recorded in ``redundant_covers``.
    """
    order: list[str] = []
    seen: set[str] = set()
    for nm in names:
        if nm in seen:
            raise DuplicateName(nm)
        seen.add(nm)
        order.append(nm)
    for hi, lo in cover_pairs:
        for nm in (hi, lo):
            if nm not in seen:
                seen.add(nm)
                order.append(nm)
    idx = {nm: i for i, nm in enumerate(order)}
    n = len(order)
    rel = np.zeros((n, n), dtype=bool)
    pairs = []
    for hi, lo in cover_pairs:
        a, b = idx[hi], idx[lo]
        if a == b:
            raise CycleDetected([hi, hi])
        rel[b, a] = True
        pairs.append((a, b))
    leq = transitive_closure(rel)
    both = leq & leq.T & ~np.eye(n, dtype=bool)
    if both.any():
        members = sorted({int(i) for i in np.nonzero(both)[0]})
        raise CycleDetected([order[i] for i in members])
    p = Poset.from_leq(order, leq)
    covset = set(p.covers)
    redundant = tuple(sorted(set(pr for pr in pairs if pr not in covset)))
    if redundant:
        p = Poset(p.names, p.leq, p.covers, redundant)
    return p


@dataclass(frozen=True, eq=False)
class DistLattice:
    order: Poset
    bottom: int
    top: int
    join_table: np.ndarray
    meet_table: np.ndarray
    J: tuple[int, ...]
    downsets: tuple[int, ...]

    @property
    def size(self) -> int:
        return self.order.size

    @property
    def names(self) -> tuple[str, ...]:
        return self.order.names

    @property
    def leq(self) -> np.ndarray:
        return self.order.leq

    @property
    def covers(self) -> tuple[tuple[int, int], ...]:
        return self.order.covers

    def name(self, i: int) -> str:
        return self.order.names[i]

    def index(self, name: str) -> int:
        return self.order.index(name)

    def join(self, a: int, b: int) -> int:
        return int(self.join_table[a, b])

    def meet(self, a: int, b: int) -> int:
        return int(self.meet_table[a, b])

    @cached_property
    def comparable(self) -> np.ndarray:
        return _freeze(self.leq | self.leq.T)

    @cached_property
    def cover_matrix(self) -> np.ndarray:
        m = np.zeros((self.size, self.size), dtype=bool)
        for a, b in self.covers:
            m[a, b] = True
        return _freeze(m)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        low: list[list[int]] = [[] for _ in range(self.size)]
        for a, b in self.covers:
            low[a].append(b)
        return tuple(tuple(sorted(x)) for x in low)

    def __repr__(self):
        return f"DistLattice(size={self.size}, J={len(self.J)})"


def _bounds_table(leq: np.ndarray, upper: bool):
    """Least upper (or greatest lower) bound of every pair; -1 where absent."""
    n = leq.shape[0]
    rel = leq if upper else leq.T  # rel[a, x]: x is an upper (lower) bound of a
    common = rel[:, None, :] & rel[None, :, :]
    # c is least in common[a,b] iff no x in common[a,b] with not rel[c, x]
    bad = common.reshape(n * n, n).astype(np.float32) @ (~rel).T.astype(np.float32)
    least = common & (bad.reshape(n, n, n) == 0)
    has = least.any(axis=2)
    table = np.where(has, least.argmax(axis=2), -1)
    return table


def validate_distributive_lattice(p: Poset) -> DistLattice:
    """Check that ``p`` is a distributive lattice and fill its tables."""
    n = p.size
    if n == 0:
        raise LatticeError("empty poset is not a lattice")
    leq = p.leq
    join = _bounds_table(leq, True)
    meet = _bounds_table(leq, False)
    for table, what in ((join, "least upper bound"), (meet, "greatest lower bound")):
        if (table < 0).any():
            a, b = (int(x) for x in np.argwhere(table < 0)[0])
            raise NotALattice(p.names[a], p.names[b], what)

    r = np.arange(n)
    lhs = meet[r[:, None, None], join[None, :, :]]
    rhs = join[meet[:, :, None], meet[:, None, :]]
    if (lhs != rhs).any():
        a, b, c = (int(x) for x in np.argwhere(lhs != rhs)[0])
        raise NotDistributive(
            p.names[a], p.names[b], p.names[c], p.names[lhs[a, b, c]], p.names[rhs[a, b, c]]
        )

    return _from_tables(p, join.astype(np.int64), meet.astype(np.int64))


def lattice_ops(L: DistLattice, a: int, b: int) -> tuple[int, int]:
    for x in (a, b):
        if not 0 <= x < L.size:
            raise IndexError(f"element {x} out of range")
    return L.join(a, b), L.meet(a, b)


def join_irreducibles(L: DistLattice) -> tuple[int, ...]:
    return L.J


def down_set(L: DistLattice, a: int) -> int:
    """Bitmask over positions in ``L.J`` of the join irreducibles below ``a``."""
    return L.downsets[a]


def down_set_elements(L: DistLattice, a: int) -> tuple[int, ...]:
    m = L.downsets[a]
    return tuple(j for pos, j in enumerate(L.J) if m >> pos & 1)


def cover_label(L: DistLattice, upper: int, lower: int) -> int:
    """The unique join irreducible ``b`` with ``I_upper = I_lower + {b}``."""
    if not L.cover_matrix[upper, lower]:
        raise NotACover(f"{L.name(upper)} does not cover {L.name(lower)}")
    diff = L.downsets[upper] & ~L.downsets[lower]
    if diff == 0 or diff & (diff - 1):
        raise AssertionError("cover with non-singleton down-set difference")
    return L.J[diff.bit_length() - 1]


def _downset_name(names, members) -> str:
    return "{" + ",".join(names[i] for i in members) + "}"


def ideal_lattice(p: Poset, max_elements: int = DEFAULT_MAX_ELEMENTS) -> DistLattice:
    """The lattice of down-sets of ``p`` ordered by inclusion.

    Elements are indexed by (size, bitmask) so the empty set is index 0.
    Names list the members of each down-set, e.g. ``{p,q}``.
    """
    n = p.size
    below = p.below_masks
    found = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for d in frontier:
            for i in range(n):
                bit = 1 << i
                if not d & bit and below[i] & ~d == 0:
                    e = d | bit
                    if e not in found:
                        found.add(e)
                        nxt.append(e)
                        if len(found) > max_elements:
                            raise SizeLimitExceeded(
                                f"more than {max_elements} down-sets"
                            )
        frontier = nxt
    sets = sorted(found, key=lambda m: (bin(m).count("1"), m))
    names = []
    for m in sets:
        names.append(_downset_name(p.names, [i for i in range(n) if m >> i & 1]))
    if len(set(names)) != len(names):
        names = [f"d{k}" for k in range(len(sets))]
    index = {m: k for k, m in enumerate(sets)}
    k = len(sets)
    leq = np.zeros((k, k), dtype=bool)
    join = np.empty((k, k), dtype=np.int64)
    meet = np.empty((k, k), dtype=np.int64)
    for a, sa in enumerate(sets):
        for b, sb in enumerate(sets):
            leq[a, b] = sa & ~sb == 0
            join[a, b] = index[sa | sb]
            meet[a, b] = index[sa & sb]
    return _from_tables(Poset.from_leq(names, leq), join, meet)


def birkhoff_poset(L: DistLattice) -> Poset:
    """Induced order on the nonzero join irreducibles."""
    ids = [j for j in L.J if j != L.bottom]
    sub = L.leq[np.ix_(ids, ids)]
    return Poset.from_leq([L.name(j) for j in ids], sub)


def lattice_code(L: DistLattice) -> str:
    """Canonical code of the Birkhoff poset; equal codes iff isomorphic lattices."""
    return birkhoff_poset(L).code


def canonical_isomorphic(L1: DistLattice, L2: DistLattice) -> bool:
    if L1.size != L2.size or len(L1.J) != len(L2.J):
        return False
    return lattice_code(L1) == lattice_code(L2)


def poset_from_code(code: str, prefix: str = "p") -> Poset:
    n, below = canon.decode(code)
    leq = np.eye(n, dtype=bool)
    for i in range(n):
        for j in range(n):
            if below[i] >> j & 1:
                leq[j, i] = True
    return Poset.from_leq([f"{prefix}{i}" for i in range(n)], leq)


def induced_sublattice(L: DistLattice, ids) -> DistLattice:
    """Restrict ``L`` to the elements ``ids`` (kept in the given order).

    The subset must be closed under join and meet; tables are taken from ``L``.
    """
    ids = list(ids)
    pos = {x: k for k, x in enumerate(ids)}
    sub_join = L.join_table[np.ix_(ids, ids)]
    sub_meet = L.meet_table[np.ix_(ids, ids)]
    try:
        join = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub_join)
        meet = np.vectorize(pos.__getitem__, otypes=[np.int64])(sub_meet)
    except KeyError:
        raise ValueError("subset is not closed under join and meet") from None
    order = Poset.from_leq([L.name(x) for x in ids], L.leq[np.ix_(ids, ids)])
    return _from_tables(order, join, meet)


def _from_tables(order: Poset, join: np.ndarray, meet: np.ndarray) -> DistLattice:
    n = order.size
    leq = order.leq
    bottom = int(np.nonzero(leq.all(axis=1))[0][0])
    top = int(np.nonzero(leq.all(axis=0))[0][0])
    lower = np.zeros(n, dtype=int)
    for a, _ in order.covers:
        lower[a] += 1
    J = tuple(int(i) for i in np.nonzero(lower <= 1)[0])
    downsets = []
    for a in range(n):
        m = 0
        for pos, j in enumerate(J):
            if leq[j, a]:
                m |= 1 << pos
        downsets.append(m)
    return DistLattice(order, bottom, top, _freeze(join), _freeze(meet), J, tuple(downsets))
