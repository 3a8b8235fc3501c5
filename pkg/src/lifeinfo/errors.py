"""Exception hierarchy.

Validation problems derive from :class:`ValidationError` (also a ``ValueError``);
problems that only arise on sampled data derive from :class:`EstimationError`.
The CLI maps the first family to exit code 3.
"""


class LifeInfoError(Exception):
    """Base class for every error raised by this package."""


class ValidationError(LifeInfoError, ValueError):
    """Invalid distribution, pairing, index or sample."""

    def __init__(self, message, path=None):
        self.path = path
        if path:
            message = f"{path}: {message}"
        super().__init__(message)


class LengthMismatchError(ValidationError):
    pass


class NonPositiveProbError(ValidationError):
    pass


class SumNotOneError(ValidationError):
    pass


class UnsortedSupportError(ValidationError):
    pass


class NonPositiveSupportError(ValidationError):
    pass


class InvalidRError(ValidationError):
    pass


class SupportMismatchError(ValidationError):
    pass


class InvalidIndexError(ValidationError):
    pass


class ResidualAtTerminalError(InvalidIndexError):
    """Residual quantity requested at the last support point, where P̄(x_r) = 0."""


class MissingQError(ValidationError):
    pass


class ValueOutsideSupportError(ValidationError):
    def __init__(self, message, index=None, value=None, path=None):
        self.index = index
        self.value = value
        super().__init__(message, path=path)


class EstimationError(LifeInfoError):
    """A plug-in estimator is undefined for the observed sample."""


class EmptyTailError(EstimationError):
    """The empirical conditioning mass (P̄_n(x_j) or P_n(x_j)) is zero."""


class ZeroCellInRangeError(EstimationError):
    """A logarithm inside the summation range would be taken of an empty cell."""


class ZeroVarianceError(LifeInfoError):
    pass


class NegativeVarianceError(LifeInfoError):
    pass


class TooFewDrawsError(LifeInfoError, ValueError):
    pass


class AllReplicationsSkippedError(EstimationError):
    pass
