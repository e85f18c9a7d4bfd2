"""Exception types raised across the package."""


class HyperdiagError(Exception):
    """Base class for every error raised by hyperdiag."""


# -- signed permutations ---------------------------------------------------

class ParseError(HyperdiagError, ValueError):
    pass


class ZeroEntry(ParseError):
    pass


class DuplicateAbs(ParseError):
    pass


class OutOfRange(ParseError):
    pass


class SizeMismatch(HyperdiagError, ValueError):
    pass


class CapExceeded(HyperdiagError, ValueError):
    pass


# -- diagrams --------------------------------------------------------------

class DiagramError(HyperdiagError, ValueError):
    pass


class OddParityCell(DiagramError):
    """A cell with odd a+b was given where an e-diagram was expected."""


class EvenParityCell(DiagramError):
    """A cell with even a+b was given where an o-diagram was expected."""


class WrongCount(DiagramError):
    pass


class RepeatedCell(DiagramError):
    """o-diagrams are sets; a cell occurred twice."""


class NotCompact(DiagramError):
    pass


class PartTooLarge(DiagramError):
    pass


class NotEDiagram(DiagramError):
    pass


class Blocked(HyperdiagError):
    """A compacting move was refused by its Vert/Horiz constraint."""

    def __init__(self, reason, blockers=()):
        super().__init__(reason)
        self.reason = reason
        self.blockers = tuple(blockers)


class ExponentTooSmall(HyperdiagError, ValueError):
    pass


class PairingViolation(HyperdiagError, RuntimeError):
    """Marginal differences did not come in equal pairs (a bug, not bad input)."""


class NegativeEntry(HyperdiagError, RuntimeError):
    pass


# -- symmetric functions / series ------------------------------------------

class LevelMismatch(HyperdiagError, ValueError):
    pass


class TooManyParts(HyperdiagError, ValueError):
    pass


class NotPolynomial(HyperdiagError, ArithmeticError):
    """A series expected to be a polynomial has a nonzero tail coefficient."""


class DivisionInexact(HyperdiagError, ArithmeticError):
    pass


class NegativeCoefficient(HyperdiagError, ArithmeticError):
    pass


class NonTermination(HyperdiagError, RuntimeError):
    pass


class IdentityFailed(HyperdiagError, AssertionError):
    def __init__(self, label, report=None):
        super().__init__(f"identity failed for {label}")
        self.label = label
        self.report = report
