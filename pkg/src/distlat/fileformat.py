"""Line-oriented lattice/poset file format.

::

    # comment
    type lattice          # or: type poset
    element NAME          # only needed for isolated elements
    cover UPPER LOWER     # UPPER covers LOWER
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    DEFAULT_MAX_ELEMENTS,
    DistLattice,
    Poset,
    build_partial_order,
    ideal_lattice,
    validate_distributive_lattice,
)
from .errors import ParseError, SizeLimitExceeded, UnknownDirective

KINDS = ("lattice", "poset")


@dataclass(frozen=True)
class InputDocument:
    kind: str
    names: tuple[str, ...]
    covers: tuple[tuple[str, str], ...]


def _check_name(name: str, lineno: int) -> str:
    if not name or "[" in name or "]" in name:
        raise ParseError(lineno, f"invalid element name {name!r}")
    return name


def parse_input(text: str) -> InputDocument:
    kind = None
    names: list[str] = []
    seen: set[str] = set()
    explicit: set[str] = set()
    covers: list[tuple[str, str]] = []

    def declare(nm):
        if nm not in seen:
            seen.add(nm)
            names.append(nm)

    for lineno, raw in enumerate(text.splitlines(), start=1):
        tokens = raw.split("#", 1)[0].split()
        if not tokens:
            continue
        head, args = tokens[0], tokens[1:]
        if kind is None:
            if head != "type":
                raise ParseError(lineno, "first line must be 'type lattice' or 'type poset'")
            if len(args) != 1 or args[0] not in KINDS:
                raise ParseError(lineno, "expected 'type lattice' or 'type poset'")
            kind = args[0]
        elif head == "type":
            raise ParseError(lineno, "duplicate type line")
        elif head == "element":
            if len(args) != 1:
                raise ParseError(lineno, "expected: element NAME")
            nm = _check_name(args[0], lineno)
            if nm in explicit:
                raise ParseError(lineno, f"element {nm} declared twice")
            explicit.add(nm)
            declare(nm)
        elif head == "cover":
            if len(args) != 2:
                raise ParseError(lineno, "expected: cover UPPER LOWER")
            hi, lo = (_check_name(a, lineno) for a in args)
            if hi == lo:
                raise ParseError(lineno, f"element {hi} cannot cover itself")
            declare(hi)
            declare(lo)
            covers.append((hi, lo))
        else:
            raise UnknownDirective(lineno, f"unknown directive {head!r}")
    if kind is None:
        raise ParseError(0, "missing 'type' line")
    return InputDocument(kind, tuple(names), tuple(covers))


def render_document(doc: InputDocument) -> str:
    pos = {nm: i for i, nm in enumerate(doc.names)}
    lines = [f"type {doc.kind}"]
    lines += [f"element {nm}" for nm in doc.names]
    for hi, lo in sorted(set(doc.covers), key=lambda c: (pos[c[0]], pos[c[1]])):
        lines.append(f"cover {hi} {lo}")
    return "".join(line + "\n" for line in lines)


def poset_of(doc: InputDocument) -> Poset:
    return build_partial_order(doc.names, doc.covers)


def lattice_of(doc: InputDocument, max_elements: int = DEFAULT_MAX_ELEMENTS) -> DistLattice:
    """Lattice files are validated; poset files give their lattice of down-sets."""
    p = poset_of(doc)
    if doc.kind == "poset":
        return ideal_lattice(p, max_elements)
    if p.size > max_elements:
        raise SizeLimitExceeded(f"{p.size} elements exceeds cap {max_elements}")
    return validate_distributive_lattice(p)


def document_of(kind: str, order: Poset) -> InputDocument:
    names = order.names
    return InputDocument(kind, names, tuple((names[a], names[b]) for a, b in order.covers))
