"""Exceptions raised by tgha."""

from __future__ import annotations

from typing import Any

from .const import ExitStatus


class TghaError(Exception):
    """Base class for all tgha errors."""

    exit_status: ExitStatus = ExitStatus.INTERNAL


class DivisionByZero(TghaError, ZeroDivisionError):
    """Inverting zero."""


class ConductorMismatch(TghaError):
    """Operands live in cyclotomic fields with no common promotion."""

    exit_status = ExitStatus.PARSE


class NotASubfield(TghaError):
    """Promotion to a field that does not contain the value."""


class GroupTooLarge(TghaError):
    """Closure exceeded the configured cap."""

    exit_status = ExitStatus.PARSE

    def __init__(self, cap: int) -> None:
        """Initialize with the cap that was exceeded."""
        super().__init__(f"group closure exceeds cap {cap}")
        self.cap = cap


class SingularGenerator(TghaError):
    """A generator matrix is not invertible."""

    exit_status = ExitStatus.PARSE

    def __init__(self, index: int) -> None:
        """Initialize with the 1-based generator number."""
        super().__init__(f"generator g{index} is singular")
        self.index = index


class DegenerateCase(TghaError):
    """The quotient V/V^g is zero-dimensional."""


class WrongGroupShape(TghaError):
    """A builtin construction does not apply to the given group."""

    exit_status = ExitStatus.COCYCLE


class _WitnessError(TghaError):
    """Error carrying a witness tuple."""

    witness_name = "witness"

    def __init__(self, message: str, witness: Any) -> None:
        super().__init__(f"{message}; {self.witness_name}={witness}")
        setattr(self, self.witness_name, witness)


class NotACocycle(_WitnessError):
    """The cocycle identity fails on a triple."""

    exit_status = ExitStatus.COCYCLE
    witness_name = "triple"


class NotNormalized(_WitnessError):
    """A value at the identity is not 1."""

    exit_status = ExitStatus.COCYCLE
    witness_name = "pair"


class NotRootOfUnity(_WitnessError):
    """A cocycle value has infinite order."""

    exit_status = ExitStatus.COCYCLE
    witness_name = "pair"


class IdentityElement(TghaError):
    """Operation not defined on the identity element."""


class WrongCodimension(TghaError):
    """Fixed space has the wrong codimension."""

    exit_status = ExitStatus.FAMILY

    def __init__(self, element: int, codim: int) -> None:
        """Initialize with the element index and its codimension."""
        super().__init__(f"element {element} has codim V^g = {codim}, expected 2")
        self.element = element
        self.codim = codim


class NotAdmissible(_WitnessError):
    """A seeded class fails the determinant criterion."""

    exit_status = ExitStatus.FAMILY
    witness_name = "element"


class InconsistentPropagation(_WitnessError):
    """Two conjugating elements give different forms on the same conjugate."""

    witness_name = "pair"


class FamilyVerificationError(TghaError):
    """A form family violates a necessary condition."""

    exit_status = ExitStatus.FAMILY

    def __init__(self, violation: Any) -> None:
        """Initialize with the first violation."""
        super().__init__(str(violation))
        self.violation = violation


class DegreeLawViolation(_WitnessError):
    """A deformation coefficient has the wrong degree."""

    exit_status = ExitStatus.DEGREE_LAW
    witness_name = "pair"


class ParseError(TghaError):
    """Malformed input text."""

    exit_status = ExitStatus.PARSE

    def __init__(self, message: str, source: str = "<input>", line: int = 0) -> None:
        """Initialize with the offending source and line number."""
        where = f"{source}:{line}" if line else source
        super().__init__(f"{where}: {message}")
        self.source = source
        self.line = line


class InternalInconsistency(TghaError):
    """An internal assertion failed."""
