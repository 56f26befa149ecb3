"""Exhaustive enumeration of small distributive lattices and the theorem suite.

Lattices are reached through their Birkhoff duals: every unlabeled poset on
at most ``max_poset_size`` points yields one distributive lattice, and every
distributive lattice arises exactly once this way.
"""

from __future__ import annotations

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from . import canon
from .core import (
    DEFAULT_MAX_ELEMENTS,
    DistLattice,
    canonical_isomorphic,
    cover_label,
    ideal_lattice,
    lattice_code,
    poset_from_code,
)
from .errors import SizeLimitExceeded
from .hibi import complete_intersection_verdict, ideal_generators, minimality_certificate
from .invariants import (
    _pair_scan,
    edge_count,
    enumerate_diamonds,
    f_vector,
    identity_count,
    lambda_f,
)
from .structure import (
    DIAMOND,
    central_elements,
    classify_ci_shape,
    classify_factor,
    concatenate,
    concatenate_all,
    decompose_thick,
    diamond_lattice,
    is_thick,
    maximal_join_irreducibles,
    prune,
)

log = logging.getLogger(__name__)

DEFAULT_POSET_CAP = 7

CHECKS = (
    "identity_eq",
    "lower_rank",
    "lower_edge",
    "upper",
    "f_geq_j",
    "lambda_sublattice",
    "join_prime",
    "cover_unique",
    "chain_length",
    "prune_theorem",
    "equality_iff",
    "ci_iff",
    "decompose_roundtrip",
    "additivity_spot",
    "minimality",
    "forward_strict",
)

HOLDS = "holds"
VIOLATED = "violated"
NOT_APPLICABLE = "not-applicable"


# -- enumeration -------------------------------------------------------------


def _downsets(n: int, below: tuple[int, ...]) -> list[int]:
    found = {0}
    stack = [0]
    while stack:
        d = stack.pop()
        for i in range(n):
            bit = 1 << i
            if not d & bit and below[i] & ~d == 0 and d | bit not in found:
                found.add(d | bit)
                stack.append(d | bit)
    return sorted(found)


@lru_cache(maxsize=None)
def _posets(n: int) -> tuple[str, ...]:
    if n == 0:
        return (canon.encode(0, 0),)
    codes = set()
    # every poset on n points is a poset on n-1 points plus a maximal point
    for code in _posets(n - 1):
        _, below = canon.decode(code)
        for d in _downsets(n - 1, below):
            codes.add(canon.poset_code(n, below + (d,)))
    return tuple(sorted(codes, key=canon.code_sort_key))


def enumerate_posets(n: int, cap: int = DEFAULT_POSET_CAP) -> list[str]:
    """Codes of all unlabeled posets on ``n`` points, sorted."""
    if n < 0 or n > cap:
        raise SizeLimitExceeded(f"poset size {n} outside [0, {cap}]")
    return list(_posets(n))


# -- theorem suite -----------------------------------------------------------


@dataclass(frozen=True)
class TheoremReport:
    lattice_id: str
    size: int
    j_size: int
    n: int
    e: int
    thick: bool
    ci: bool
    checks: dict = field(hash=False)
    conjecture_holds: str

    @property
    def failed(self) -> list[str]:
        return [c for c in CHECKS if not self.checks[c]]


def _chain_lengths(L: DistLattice) -> tuple[int, int]:
    """Fewest and most elements on a maximal chain (cover path bottom to top)."""
    order = sorted(range(L.size), key=lambda i: int(L.leq[:, i].sum()))
    lo = {L.bottom: 1}
    hi = {L.bottom: 1}
    for x in order:
        if x == L.bottom:
            continue
        below = L.lower_covers[x]
        lo[x] = 1 + min(lo[y] for y in below)
        hi[x] = 1 + max(hi[y] for y in below)
    return lo[L.top], hi[L.top]


def _check_lambda(L: DistLattice) -> bool:
    r = np.arange(L.size)
    for d in range(L.size):
        members, f = lambda_f(L, d)
        mask = np.zeros(L.size, dtype=bool)
        mask[list(members)] = True
        down = L.meet_table[:, d] == r
        up = L.join_table[:, d] == r
        if not np.array_equal(mask, down | up) or f != len(members):
            return False
        m = np.array(members)
        if not mask[L.join_table[np.ix_(m, m)]].all():
            return False
        if not mask[L.meet_table[np.ix_(m, m)]].all():
            return False
    return True


def _check_join_prime(L: DistLattice) -> bool:
    for b in L.J:
        up = L.leq[b]
        lhs = up[L.join_table]
        rhs = up[:, None] | up[None, :]
        if (lhs & ~rhs).any():
            return False
    return True


def _check_covers(L: DistLattice) -> bool:
    pos = {j: k for k, j in enumerate(L.J)}
    J = set(L.J)
    for a, g in L.covers:
        diff = L.downsets[a] & ~L.downsets[g]
        if bin(diff).count("1") != 1:
            return False
        b = cover_label(L, a, g)
        if diff != 1 << pos[b]:
            return False
        if a in J and b != a:
            return False
        if L.join(g, b) != a:
            return False
    return True


def _check_prune(L: DistLattice) -> bool:
    for a in maximal_join_irreducibles(L):
        P = prune(L, a)
        if P.size != L.size - int(L.leq[a].sum()):
            return False
        want = sorted(L.name(j) for j in L.J if j != a)
        if sorted(P.name(j) for j in P.J) != want:
            return False
        # tables of P are restrictions of L's
        ids = [L.index(nm) for nm in P.names]
        for x in range(P.size):
            for y in range(P.size):
                if ids[P.join(x, y)] != L.join(ids[x], ids[y]):
                    return False
                if ids[P.meet(x, y)] != L.meet(ids[x], ids[y]):
                    return False
    return True


def _check_decomposition(L: DistLattice) -> bool:
    dec = decompose_thick(L)
    if L.size >= 2:
        if any(F.size == 1 for F in dec.factors):
            return False
        if is_thick(L) != (len(dec.factors) == 1):
            return False
    if any(F.size >= 3 and not is_thick(F) for F in dec.factors):
        return False
    if dec.cut_elements != central_elements(L) or len(dec.factors) != len(dec.cut_elements) + 1:
        return False
    glued = concatenate_all(dec.factors)
    return glued.size == L.size and canonical_isomorphic(glued, L)


def _is_diamond_or_two_chain(L: DistLattice) -> bool:
    return L.size == 2 or classify_factor(L) == DIAMOND


def verify_theorem_suite(L: DistLattice, lattice_id: str | None = None) -> TheoremReport:
    """Run every proved statement on ``L``; failures are recorded, never raised."""
    if lattice_id is None:
        lattice_id = lattice_code(L)
    size = L.size
    j = len(L.J)
    n = _pair_scan(L)
    e = edge_count(L)
    fv = f_vector(L)
    thick = is_thick(L)
    shape, _ = classify_ci_shape(L)
    D = diamond_lattice()

    def identity_eq():
        diamonds = enumerate_diamonds(L)
        sets = {d.elements for d in diamonds}
        return n == identity_count(L) == len(diamonds) == len(sets)

    def additivity():
        G = concatenate(L, D)
        return (
            _pair_scan(G) == n + 1
            and edge_count(G) == e + 4
            and G.size == size + 3
            and len(G.J) == j + 2
        )

    def minimality():
        gens = ideal_generators(L)
        ok = len(gens) == n and minimality_certificate(gens)
        for g in gens:
            a, b = g.plus_pair
            ok = ok and g.minus_pair == (L.join(a, b), L.meet(a, b))
        return ok

    def forward_strict():
        if thick and size >= 2 and not _is_diamond_or_two_chain(L):
            return n > size - j
        return True

    tests = {
        "identity_eq": identity_eq,
        "lower_rank": lambda: n >= size - j,
        "lower_edge": lambda: n >= e - size + 1,
        "upper": lambda: 2 * n <= (size - j) * size,
        "f_geq_j": lambda: min(fv) >= j,
        "lambda_sublattice": lambda: _check_lambda(L),
        "join_prime": lambda: _check_join_prime(L),
        "cover_unique": lambda: _check_covers(L),
        "chain_length": lambda: _chain_lengths(L) == (j, j),
        "prune_theorem": lambda: _check_prune(L),
        "equality_iff": lambda: (n == size - j) == shape,
        "ci_iff": lambda: complete_intersection_verdict(L).is_complete_intersection == shape,
        "decompose_roundtrip": lambda: _check_decomposition(L),
        "additivity_spot": additivity,
        "minimality": minimality,
        "forward_strict": forward_strict,
    }
    results = {}
    for name in CHECKS:
        try:
            results[name] = bool(tests[name]())
        except Exception:  # a crash inside a check counts as a failure
            log.exception("check %s crashed on %s", name, lattice_id)
            results[name] = False

    if not thick:
        conj = NOT_APPLICABLE
    elif n >= e - j:
        conj = HOLDS
    else:
        conj = VIOLATED
    return TheoremReport(lattice_id, size, j, n, e, thick, shape, results, conj)


# -- scan --------------------------------------------------------------------


@dataclass(frozen=True)
class ScanReport:
    max_poset_size: int
    lattices_tested: int
    failures: tuple[tuple[str, str], ...]
    conjecture_counterexamples: tuple[tuple[str, int, int, int], ...]
    reports: tuple[TheoremReport, ...]


def _verify_codes(codes) -> list[TheoremReport]:
    out = []
    for code in codes:
        L = ideal_lattice(poset_from_code(code), DEFAULT_MAX_ELEMENTS)
        out.append(verify_theorem_suite(L, code))
    return out


def _shards(items, size):
    return [items[i : i + size] for i in range(0, len(items), size)]


def conjecture_scan(
    max_poset_size: int, workers: int = 1, cap: int = DEFAULT_POSET_CAP
) -> ScanReport:
    codes = []
    for k in range(max_poset_size + 1):
        codes.extend(enumerate_posets(k, cap))
    if workers <= 1:
        reports = _verify_codes(codes)
    else:
        reports = []
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_verify_codes, _shards(codes, 16)):
                reports.extend(part)
    reports.sort(key=lambda r: canon.code_sort_key(r.lattice_id))
    failures = tuple((r.lattice_id, c) for r in reports for c in r.failed)
    counter = tuple(
        (r.lattice_id, r.n, r.e, r.j_size) for r in reports if r.conjecture_holds == VIOLATED
    )
    return ScanReport(max_poset_size, len(reports), failures, counter, tuple(reports))


def render_scan(rep: ScanReport) -> str:
    thick = sum(r.thick for r in rep.reports)
    ci = sum(r.ci for r in rep.reports)
    lines = [
        f"max_poset_size: {rep.max_poset_size}",
        f"lattices_tested: {rep.lattices_tested}  failures: {len(rep.failures)}",
        f"largest_lattice: {max((r.size for r in rep.reports), default=0)}",
        f"complete_intersections: {ci}",
        f"thick_lattices: {thick}",
        f"conjecture_counterexamples: {len(rep.conjecture_counterexamples)}",
    ]
    for code, check in rep.failures:
        lines.append(f"failure {code} {check}")
    for code, n, e, j in rep.conjecture_counterexamples:
        lines.append(f"counterexample {code} n={n} e={e} J={j} e-J={e - j}")
    return "".join(line + "\n" for line in lines)


def render_tsv(rep: ScanReport) -> str:
    def b(x):
        return "true" if x else "false"

    lines = ["# code\tsize\tJ\tn\te\tthick\tci\tconjecture"]
    for r in rep.reports:
        lines.append(
            f"{r.lattice_id}\t{r.size}\t{r.j_size}\t{r.n}\t{r.e}\t{b(r.thick)}\t{b(r.ci)}\t{r.conjecture_holds}"
        )
    return "".join(line + "\n" for line in lines)
