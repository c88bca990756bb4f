"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument violates an operation's mathematical domain.

    The message names the violated constraint.
    """


class ConvergenceError(ArithmeticError):
    """An iteration or refinement budget ran out before the tolerance was met.

    ``best`` carries the best estimate produced before giving up (an
    ``EvalResult``), so callers can inspect how close the run got.
    """

    def __init__(self, message: str, best=None):
        super().__init__(message)
        self.best = best


class IntegrandError(ArithmeticError):
    """The integrand returned a non-finite value away from a singular endpoint.

    ``abscissa`` is the offending evaluation point.
    """

    def __init__(self, message: str, abscissa: float):
        super().__init__(message)
        self.abscissa = abscissa


class UnsupportedPairKindError(ValueError):
    """An operation was applied to a transform-pair kind it does not support."""
