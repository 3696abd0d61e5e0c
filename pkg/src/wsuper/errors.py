"""Exception types shared across the library."""


class WsuperError(Exception):
    """Base class for all library errors."""


class ParseError(WsuperError):
    """Malformed input document or expression text."""


class AxiomViolation(WsuperError):
    """A required algebraic axiom fails; message names the axiom and witness."""


class GradingError(WsuperError):
    """ad x is not diagonal in the declared basis."""


class UnknownBuiltin(WsuperError):
    """Unrecognized built-in algebra name."""


class DegenerateForm(WsuperError):
    """The invariant bilinear form is singular where it must be invertible."""


class MixedSpaces(WsuperError):
    """Operands live over different generator spaces."""


class ParityMismatch(WsuperError):
    """A substitution or assignment does not preserve parity."""


class NotMinimal(WsuperError):
    """Operation requires a minimal even nilpotent f."""


class NotTriangular(WsuperError):
    """Generator family lacks the triangular leading-term shape."""


class NoLift(WsuperError):
    """Finite element has no registered affine lift."""


class Uncertified(WsuperError):
    """Operation requires a certified W-element."""


class NoSolution(WsuperError):
    """An exact linear system expected to be solvable has no solution."""
