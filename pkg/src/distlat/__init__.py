"""Finite distributive lattices: non-comparable pairs, bounds, Hibi ideal generators."""

from .core import (
    DistLattice,
    Poset,
    birkhoff_poset,
    build_partial_order,
    canonical_isomorphic,
    cover_label,
    down_set,
    ideal_lattice,
    join_irreducibles,
    lattice_ops,
    validate_distributive_lattice,
)
from .hibi import complete_intersection_verdict, ideal_generators, minimality_certificate
from .invariants import bounds_report, enumerate_diamonds, lambda_f, noncomparable_count
from .structure import classify_ci_shape, concatenate, decompose_thick, is_thick, prune

__all__ = [
    "DistLattice",
    "Poset",
    "birkhoff_poset",
    "bounds_report",
    "build_partial_order",
    "canonical_isomorphic",
    "classify_ci_shape",
    "complete_intersection_verdict",
    "concatenate",
    "cover_label",
    "decompose_thick",
    "down_set",
    "enumerate_diamonds",
    "ideal_generators",
    "ideal_lattice",
    "is_thick",
    "join_irreducibles",
    "lambda_f",
    "lattice_ops",
    "minimality_certificate",
    "noncomparable_count",
    "prune",
    "validate_distributive_lattice",
]
