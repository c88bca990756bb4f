"""Value-plus-error-estimate container returned by the numerical routines."""

import math
from dataclasses import dataclass

#: The evaluation strategies a result may report.
METHODS = ("series", "continued-fraction", "closed-form", "quadrature")


@dataclass(frozen=True)
class EvalResult:
    """A numerical value, its estimated absolute error, and how it was produced.

    ``evals`` counts integrand or term evaluations.  Non-finite values are
    never stored here; failures are raised through the error channel instead.
    """

    value: float
    abs_err: float
    method: str
    evals: int = 0

    def __post_init__(self):
        if self.method not in METHODS:
            raise ValueError(f"unknown method {self.method!r}; expected one of {METHODS}")
        if not math.isfinite(self.value):
            raise ValueError("EvalResult.value must be finite; report failures as errors")
        if not (math.isfinite(self.abs_err) and self.abs_err >= 0.0):
            raise ValueError("EvalResult.abs_err must be finite and non-negative")
        if self.evals < 0:
            raise ValueError("EvalResult.evals must be non-negative")
