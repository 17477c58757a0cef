"""Exception hierarchy. Every error raised by the library derives from LiebError."""

from __future__ import annotations


class LiebError(Exception):
    """Base class for library errors."""


class InputError(LiebError, ValueError):
    """Malformed or inconsistent user input (CLI exit code 2)."""


class MathFailure(LiebError):
    """A mathematical precondition does not hold (CLI exit code 1)."""


# algebra_core
class DimensionMismatch(InputError):
    pass


class DuplicateBracketEntry(InputError):
    pass


class JacobiViolation(MathFailure):
    def __init__(self, triple, defect):
        self.triple = triple
        self.defect = defect
        super().__init__(f"Jacobi identity fails on basis triple {triple}: defect {defect}")


# shared
class GradeMismatch(InputError):
    pass


class BoundExceeded(InputError):
    pass


class NotASubspaceOfG(InputError):
    pass


class AlgebraMismatch(InputError):
    pass


class GradeOutOfRange(InputError):
    pass


class ZeroInput(InputError):
    pass


class MixedGrade(InputError):
    pass


class ArityGradeMismatch(InputError):
    pass


class ArityMismatch(InputError):
    pass


class ParseError(InputError):
    pass


# gradation
class ClosureViolation(MathFailure):
    def __init__(self, pair, component, expected, found):
        self.pair = pair
        self.component = component
        super().__init__(
            f"bracket of basis pair {pair} has component {component} of degree {found}, expected {expected}"
        )


class ModulusViolation(InputError):
    pass


# invariants
class KernelConditionFailed(MathFailure):
    pass


class NotTracelessIdeal(MathFailure):
    pass


class NotDecomposable(MathFailure):
    pass


class NotInvariant(MathFailure):
    pass


class NotNilpotent(MathFailure):
    pass


# ybe
class DegreeOverflow(InputError):
    pass


# catalog
class UnknownName(InputError):
    pass


class BadParameter(InputError):
    pass
