"""Exception types shared across the package."""


class LatticeError(Exception):
    """Base class for rejected input."""


class CycleDetected(LatticeError):
    def __init__(self, cycle):
        self.cycle = tuple(cycle)
        super().__init__("cover relation has a cycle through: " + " ".join(self.cycle))


class DuplicateName(LatticeError):
    def __init__(self, name):
        self.name = name
        super().__init__(f"duplicate element name {name!r}")


class NotALattice(LatticeError):
    def __init__(self, a, b, missing):
        self.pair = (a, b)
        self.missing = missing
        super().__init__(f"not a lattice: {a} and {b} have no {missing}")


class NotDistributive(LatticeError):
    def __init__(self, a, b, c, lhs, rhs):
        self.triple = (a, b, c)
        super().__init__(
            f"not distributive at (x, y, z) = ({a}, {b}, {c}): "
            f"meet(x, join(y, z)) = {lhs} but join(meet(x, y), meet(x, z)) = {rhs}"
        )


class SizeLimitExceeded(LatticeError):
    pass


class NotACover(LatticeError):
    pass


class NotMaximalJoinIrreducible(LatticeError):
    pass


class ParseError(LatticeError):
    def __init__(self, lineno, message):
        self.lineno = lineno
        super().__init__(f"line {lineno}: {message}")


class UnknownDirective(ParseError):
    pass


class TheoremViolation(AssertionError):
    """A proved inequality or identity failed; always an implementation bug."""
