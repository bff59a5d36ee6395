"""Exception hierarchy for the curvature engine.

Structural failures (singular tensors, cone violations, ill-posed fits) are
raised as typed exceptions so the harness can record them as check failures
instead of crashing a whole run.
"""


class FinslerError(Exception):
    """Base class for all library errors."""


class ConfigurationError(FinslerError):
    """Invalid configuration value (jet order out of range, bad parameters)."""


class ContractViolationError(FinslerError):
    """An operation was asked for data beyond what the inputs carry."""


class SingularMatrixError(FinslerError):
    """A matrix inversion hit a (near-)singular value part."""

    def __init__(self, label: str, detail: str = ""):
        self.label = label
        msg = f"singular matrix: {label}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class DegenerateMetricError(FinslerError):
    """Fundamental tensor not positive definite at a sample point."""


class DomainError(FinslerError):
    """Point outside the chart domain."""


class ConeError(DomainError):
    """Direction outside the admissible cone of the metric."""


class UnsupportedDimensionError(FinslerError):
    """Operation not defined at this dimension."""


class SingularDenominatorError(FinslerError):
    """Sample too close to the characteristic singular set of the spray formula."""


class DegenerateFormError(FinslerError):
    """The 1-form vanishes where a positive length is required."""


class ParameterError(FinslerError):
    """Scalar parameter outside its admissible interval."""


class StructureError(FinslerError):
    """A structural ansatz (e.g. proportionality of tensors) fails to hold."""


class LambdaIndeterminateError(FinslerError):
    """Least-squares fit for a scalar factor is degenerate at this sample."""


class SamplingError(FinslerError):
    """Rejection sampling failed to find admissible points."""


class ConstraintError(FinslerError):
    """Model parameters violate a required algebraic constraint."""
