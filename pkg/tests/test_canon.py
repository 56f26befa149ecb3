import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from distlat import canon
from distlat.core import Poset, poset_from_code
from strategies import posets


def relabel(p, perm):
    q = np.zeros_like(p.leq)
    idx = np.array(perm, dtype=int)
    if p.size:
        q[np.ix_(idx, idx)] = p.leq
    return Poset.from_leq(p.names, q)


@settings(max_examples=100, deadline=None)
@given(posets(max_size=7), st.randoms(use_true_random=False))
def test_code_invariant_under_relabeling(p, rnd):
    perm = list(range(p.size))
    rnd.shuffle(perm)
    assert relabel(p, perm).code == p.code


@settings(max_examples=100, deadline=None)
@given(posets(max_size=7))
def test_decode_roundtrip(p):
    code = p.code
    q = poset_from_code(code)
    assert q.code == code
    n, below = canon.decode(code)
    assert canon.encode(n, canon.canonical_form(n, below)[0]) == code


@pytest.mark.parametrize("n", range(5))
def test_codes_separate_isomorphism_classes(n):
    """Brute force over all labeled posets: same code iff same brute-force canonical form."""
    from itertools import product

    off = [(a, b) for a in range(n) for b in range(n) if a != b]
    pairs = {}
    for bits in product((0, 1), repeat=len(off)):
        strict = {pr for pr, bit in zip(off, bits) if bit}
        le = strict | {(a, a) for a in range(n)}
        if not oracles.is_partial_order(n, le):
            continue
        leq = np.zeros((n, n), dtype=bool)
        for a, b in le:
            leq[a, b] = True
        code = Poset.from_leq([str(i) for i in range(n)], leq).code
        pairs.setdefault(oracles.canonical_strict(n, strict), set()).add(code)
    assert all(len(codes) == 1 for codes in pairs.values())
    all_codes = [c for codes in pairs.values() for c in codes]
    assert len(set(all_codes)) == len(all_codes)
