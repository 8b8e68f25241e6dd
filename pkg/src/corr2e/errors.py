"""Exception types shared across the package."""


class ParameterError(ValueError):
    """Wave-function parameters violate a model constraint (e.g. a >= Z)."""


class DegenerateParameterError(ValueError):
    """A coefficient denominator vanishes for the given parameters (e.g. Z = b)."""


class SingularityError(ValueError):
    """A 1/r pole whose coefficients do not cancel; the r -> 0 limit does not exist."""


class DivergentIntegralError(ValueError):
    """The requested integral or transform diverges for the given terms."""


class UnsupportedShapeError(ValueError):
    """A term shape outside the supported r^n (n >= -1) family was encountered."""


class AccuracyError(RuntimeError):
    """Adaptive quadrature did not reach the requested tolerance.

    Carries the best available estimate in ``value`` and the error bound in
    ``error_estimate``.
    """

    def __init__(self, message: str, value: float, error_estimate: float):
        super().__init__(message)
        self.value = value
        self.error_estimate = error_estimate
