"""Semantic exception hierarchy.

Every failure mode that callers are expected to handle gets its own class;
everything derives from :class:`TracedetError` so library users can catch
broadly. Names describe the violated precondition or the numerical event.
"""


class TracedetError(Exception):
    """Base class for all errors raised by this package."""


# --- argument validation -----------------------------------------------------

class NonPositiveArgument(TracedetError):
    """An argument that must be strictly positive was <= 0."""


class ModulusOutOfRange(TracedetError):
    """Elliptic modulus k outside [0, 1)."""


class PhiOutOfRange(TracedetError):
    """Incomplete-integral amplitude outside (-pi/2, pi/2)."""


class Overflow(TracedetError):
    """Result magnitude not representable; use the log-scaled variant."""


# --- jet arithmetic ----------------------------------------------------------

class BasePointMismatch(TracedetError):
    """Binary jet operation on jets anchored at different base points."""


class DivisionBySingularJet(TracedetError):
    """Jet division by a jet whose constant term vanishes."""


class SingularComposition(TracedetError):
    """Elementary function applied to a jet outside its domain."""


class ZeroOrder(TracedetError):
    """Derivative of an order-0 jet requested."""


class OrderTooHigh(TracedetError):
    """Requested truncation order exceeds the supported maximum."""


# --- series / residual evaluation -------------------------------------------

class EvaluationAtSingularPoint(TracedetError):
    """Series coefficient evaluated at (or too close to) a singular point."""


# --- ODE integration ---------------------------------------------------------

class SeedPointTooSmall(TracedetError):
    """Seeding abscissa does not dominate the spectral parameter."""


class StepSizeUnderflow(TracedetError):
    """Adaptive integrator stalled; carries the abscissa where it happened."""

    def __init__(self, message, x=None):
        super().__init__(message)
        self.x = x


class QuadratureFailure(TracedetError):
    """An adaptive quadrature did not reach the requested tolerance."""


class OffGrid(TracedetError):
    """Evaluation point not covered by a stored solution path."""


# --- spectrum ----------------------------------------------------------------

class ReferenceAtEigenvalue(TracedetError):
    """Determinant reference point coincides with an eigenvalue."""


class BracketNotFound(TracedetError):
    """Eigenvalue bracketing scan failed after the allowed retries."""


class InsufficientEigenvalues(TracedetError):
    """Product cross-check called with too few eigenvalues."""


# --- fitting -----------------------------------------------------------------

class IllConditionedFit(TracedetError):
    """Least-squares basis Gram matrix condition number above threshold."""
