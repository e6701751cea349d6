"""Exception hierarchy shared by all modules.

``PreconditionError`` marks inputs that violate a documented precondition
(detectable before any real computation starts).  ``ComputationError`` and
its subclasses mark failures discovered mid-computation, such as a modulus
with repeated residue roots or a singular matrix.
"""


class AlgebraError(Exception):
    """Base class for all errors raised by this package."""


class PreconditionError(AlgebraError, ValueError):
    """An operation was called with arguments violating its precondition."""


class ComputationError(AlgebraError, ArithmeticError):
    """A mathematical obstruction was hit while computing."""


class RepeatedResidueRootsError(ComputationError):
    """The modulus polynomial has a repeated root modulo p."""


class SingularMatrixError(ComputationError):
    """Matrix inversion was requested but the determinant is not a unit."""

    def __init__(self, message, det=None):
        super().__init__(message)
        self.det = det


class NotAnImageError(ComputationError):
    """A vector claimed to be a transform image has no base-ring preimage."""


class EnumerationBudgetError(PreconditionError):
    """An exhaustive enumeration would exceed the supported budget."""
