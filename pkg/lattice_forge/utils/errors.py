from typing import Optional


class LatticeForgeError(Exception):
    """Base class for every error raised by lattice_forge."""


class InvalidInputError(LatticeForgeError, ValueError):
    """The input violates a documented precondition (CLI exit code 1)."""


class NumericalError(LatticeForgeError, ArithmeticError):
    """A numerical step failed on otherwise valid input (CLI exit code 2)."""


class DisconnectedGraphError(InvalidInputError):
    pass


class BasisError(InvalidInputError):
    """Cycle bases, labels or vanishing declarations that do not fit H1."""


class CrystalFileError(InvalidInputError):
    def __init__(self, message: str, line_number: Optional[int] = None):
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class SingularMatrixError(NumericalError):
    pass


class DegenerateVertexError(NumericalError):
    def __init__(self, vertex: int, message: str = "degenerate vertex"):
        self.vertex = vertex
        super().__init__(f"{message} {vertex}")
