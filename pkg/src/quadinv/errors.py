"""Exception hierarchy.

Math-domain failures (``NotInImage``, ``UnsupportedRank``) are distinguished
from internal invariant violations so the command line can map them to
different exit codes.
"""


class QuadInvError(Exception):
    """Base class for every error raised by this package."""


class ContextMismatch(QuadInvError, TypeError):
    pass


class UnboundVariable(QuadInvError, KeyError):
    pass


class DegreeCapExceeded(QuadInvError, ValueError):
    pass


class NoSolution(QuadInvError, ArithmeticError):
    """A GF(2) linear system has no solution."""


class MathDomainError(QuadInvError, ValueError):
    pass


class NotInImage(MathDomainError):
    """The element is not in the image of the pullback to BO(2n)."""


class UnsupportedRank(MathDomainError):
    pass


class InternalInvariantViolation(QuadInvError, RuntimeError):
    """A computation contradicted a mathematical guarantee it relies on."""


class ExprSyntaxError(QuadInvError, ValueError):
    """Malformed expression; ``position`` is a 0-based character offset."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class UnknownGenerator(ExprSyntaxError):
    def __init__(self, name: str, position: int, ring=None):
        where = f" in {ring!r}" if ring is not None else ""
        QuadInvError.__init__(self, f"unknown generator {name!r}{where} at position {position}")
        self.position = position
        self.name = name
