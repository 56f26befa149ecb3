"""Canonical codes for unlabeled finite posets.

A poset on ``n`` points is handled here in its lightest form: a tuple
``below`` where ``below[i]`` is the bitmask of points strictly below ``i``.
The canonical code is the lexicographically smallest row-major strict-order
matrix over all relabelings that respect an isomorphism-invariant colouring
(colour refinement on up/down neighbourhoods).  Restricting to colour-respecting
relabelings keeps the code canonical while pruning most permutations.
"""

from __future__ import annotations

from itertools import permutations, product


def _above(n: int, below: tuple[int, ...]) -> list[int]:
    above = [0] * n
    for i in range(n):
        m = below[i]
        j = 0
        while m:
            if m & 1:
                above[j] |= 1 << i
            m >>= 1
            j += 1
    return above


def _members(mask: int):
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def refine_colours(n: int, below: tuple[int, ...]) -> list[int]:
    above = _above(n, below)
    down = [list(_members(below[i])) for i in range(n)]
    up = [list(_members(above[i])) for i in range(n)]

    def rank(sigs):
        table = {s: r for r, s in enumerate(sorted(set(sigs)))}
        return [table[s] for s in sigs]

    colour = rank([(len(down[i]), len(up[i])) for i in range(n)])
    while True:
        new = rank([
            (colour[i], tuple(sorted(colour[j] for j in down[i])), tuple(sorted(colour[j] for j in up[i])))
            for i in range(n)
        ])
        # new always refines colour; equal cell counts means the partition is stable
        if len(set(new)) == len(set(colour)):
            return colour
        colour = new


def canonical_form(n: int, below: tuple[int, ...]) -> tuple[int, tuple[int, ...]]:
    """Return ``(value, order)``: the minimal matrix value and a relabeling achieving it.

    ``order[k]`` is the original point placed at canonical position ``k``.
    """
    if n == 0:
        return 0, ()
    colour = refine_colours(n, below)
    cells: dict[int, list[int]] = {}
    for i in range(n):
        cells.setdefault(colour[i], []).append(i)
    groups = [cells[c] for c in sorted(cells)]

    best = None
    best_order: tuple[int, ...] = ()
    for choice in product(*(permutations(g) for g in groups)):
        order = tuple(x for part in choice for x in part)
        value = 0
        for i in order:
            bi = 1 << i
            for j in order:
                value = (value << 1) | (1 if below[j] & bi else 0)
        if best is None or value < best:
            best = value
            best_order = order
    return best, best_order


def encode(n: int, value: int) -> str:
    width = max(1, (n * n + 3) // 4)
    return f"{n}:{value:0{width}x}"


def decode(code: str) -> tuple[int, tuple[int, ...]]:
    """Inverse of :func:`encode`; returns ``(n, below)``."""
    head, _, digits = code.partition(":")
    n = int(head)
    value = int(digits, 16)
    below = [0] * n
    for i in range(n):
        for j in range(n):
            bit = n * n - 1 - (i * n + j)
            if value >> bit & 1:
                below[j] |= 1 << i
    return n, tuple(below)


def poset_code(n: int, below: tuple[int, ...]) -> str:
    return encode(n, canonical_form(n, below)[0])


def code_sort_key(code: str):
    n, _, digits = code.partition(":")
    return int(n), digits
