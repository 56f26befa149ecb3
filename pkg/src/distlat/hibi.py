"""Diamond binomial generators of the Hibi ideal and the complete-intersection test.

Only counting and text emission happen here; no polynomial ring is built.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import DistLattice
from .errors import TheoremViolation
from .invariants import enumerate_diamonds, noncomparable_count
from .structure import classify_ci_shape


@dataclass(frozen=True)
class Binomial:
    plus_pair: tuple[int, int]
    minus_pair: tuple[int, int]


@dataclass(frozen=True)
class CIVerdict:
    ambient_dim: int
    variety_dim: int
    codim: int
    generator_count: int
    is_complete_intersection: bool


def ideal_generators(L: DistLattice) -> list[Binomial]:
    return [
        Binomial((d.theta, d.delta), (d.join, d.meet)) for d in enumerate_diamonds(L)
    ]


def minimality_certificate(gens) -> bool:
    """No degree-2 generator can be a combination of the others.

    Each ``x_a x_b`` with ``a``, ``b`` incomparable occurs in exactly one
    generator, so distinct leading supports suffice.
    """
    supports = [frozenset(g.plus_pair) for g in gens]
    if len(set(supports)) != len(supports):
        return False
    minus = {frozenset(g.minus_pair) for g in gens}
    return not (minus & set(supports))


def complete_intersection_verdict(L: DistLattice) -> CIVerdict:
    n = noncomparable_count(L)
    j = len(L.J)
    codim = L.size - j
    if n < codim:
        raise TheoremViolation(f"generator count {n} below codimension {codim}")
    ci = n == codim
    shape, _ = classify_ci_shape(L)
    if ci != shape:
        raise TheoremViolation(
            f"n = |L| - |J| is {ci} but diamond/chain concatenation is {shape}"
        )
    return CIVerdict(L.size, j, codim, n, ci)


def render_binomial(g: Binomial, names) -> str:
    a, b = g.plus_pair
    c, d = g.minus_pair
    return f"x[{names[a]}]*x[{names[b]}] - x[{names[c]}]*x[{names[d]}]"


def render_ideal(gens, names) -> str:
    lines = sorted(render_binomial(g, names) for g in gens)
    return "".join(line + "\n" for line in lines)


def render_ideal_document(L: DistLattice) -> str:
    gens = ideal_generators(L)
    header = (
        f"# ideal I(L): {len(gens)} generators, ambient {L.size}, "
        f"codim {L.size - len(L.J)}\n"
    )
    return header + render_ideal(gens, L.names)
