"""Core evaluation of Gamma, log-Gamma, the lower incomplete gamma function,
its regularized form, and the error-function family, in 64-bit floats.

The incomplete gamma engine uses the standard stable split: a power series
for x <= s + 1 and a modified-Lentz continued fraction for the upper tail
otherwise.  erf/erfc/erfcx ride on the same engine through gamma(1/2, x^2).
All functions are pure and reject non-finite input rather than propagate NaN.
"""

import math

from .errors import ConvergenceError, DomainError
from .result import EvalResult

SQRT_PI = math.sqrt(math.pi)

#: Iteration budget for the series and continued-fraction loops.
MAX_ITER = 500

_EPS = 2.0 ** -52
_TINY = 1e-300

#: Largest shape parameter whose Gamma value is representable in a double.
GAMMA_OVERFLOW_S = 170.0

# Lanczos approximation, g = 7, 9 coefficients.
_LANCZOS_G = 7.0
_LANCZOS_C0 = 0.99999999999980993
_LANCZOS = (
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-06,
    1.5056327351493116e-07,
)

_LOG_SQRT_TWO_PI = 0.5 * math.log(2.0 * math.pi)


def _require_finite(name: str, x: float):
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")


def ln_gamma(s: float) -> float:
    """Natural log of Gamma(s) for s > 0, via Lanczos in log space."""
    _require_finite("s", s)
    if s <= 0.0:
        raise DomainError(f"ln_gamma requires s > 0, got {s!r}")
    z = s - 1.0
    acc = _LANCZOS_C0
    for i, c in enumerate(_LANCZOS):
        acc += c / (z + i + 1.0)
    t = z + _LANCZOS_G + 0.5
    return _LOG_SQRT_TWO_PI + (z + 0.5) * math.log(t) - t + math.log(acc)


def gamma_fn(s: float) -> float:
    """Gamma(s) = exp(ln_gamma(s)); raises OverflowError once unrepresentable."""
    _require_finite("s", s)
    if s <= 0.0:
        raise DomainError(f"gamma_fn requires s > 0, got {s!r}")
    if s > GAMMA_OVERFLOW_S:
        raise OverflowError(
            f"gamma_fn overflows for s > {GAMMA_OVERFLOW_S:g}, got {s!r}")
    return math.exp(ln_gamma(s))


def _check_gamma_args(s: float, x: float):
    _require_finite("s", s)
    _require_finite("x", x)
    if s <= 0.0:
        raise DomainError(f"lower incomplete gamma requires s > 0, got s={s!r}")
    if x < 0.0:
        raise DomainError(f"lower incomplete gamma requires x >= 0, got x={x!r}")
    if s > GAMMA_OVERFLOW_S:
        raise OverflowError(
            f"Gamma(s) overflows for s > {GAMMA_OVERFLOW_S:g}, got s={s!r}")


def _best_or_none(value: float, err: float, method: str) -> EvalResult:
    if math.isfinite(value) and math.isfinite(err):
        return EvalResult(value, abs(err), method, MAX_ITER)
    return None


def _series_sum(s: float, x: float):
    """Kummer series for gamma(s,x)/(x^s e^-x); returns (sum, last_term, evals)."""
    ap = s
    term = 1.0 / s
    total = term
    for n in range(1, MAX_ITER + 1):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            return total, term, n
    raise ConvergenceError(
        f"incomplete gamma series did not converge in {MAX_ITER} terms "
        f"for s={s!r}, x={x!r}",
        best=_best_or_none(total * math.exp(s * math.log(x) - x), term, "series"))


def _cf_value(s: float, x: float):
    """Modified-Lentz continued fraction for Gamma(s,x)/(x^s e^-x); x > 0.

    Returns (cf, evals).
    """
    b = x + 1.0 - s
    c = 1.0 / _TINY
    d = 1.0 / b if b != 0.0 else 1.0 / _TINY
    h = d
    for i in range(1, MAX_ITER + 1):
        an = -i * (i - s)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            return h, i
    raise ConvergenceError(
        f"incomplete gamma continued fraction did not converge in {MAX_ITER} "
        f"steps for s={s!r}, x={x!r}",
        best=_best_or_none(h * math.exp(s * math.log(x) - x), h * _EPS,
                           "continued-fraction"))


def lower_gamma(s: float, x: float) -> EvalResult:
    """Lower incomplete gamma: the integral of t^(s-1) e^-t over (0, x]."""
    _check_gamma_args(s, x)
    if x == 0.0:
        return EvalResult(0.0, 0.0, "series", 0)
    if x <= s + 1.0:
        total, last, n = _series_sum(s, x)
        prefix = math.exp(s * math.log(x) - x)
        value = total * prefix
        abs_err = abs(last) * prefix + 4.0 * _EPS * abs(value)
        return EvalResult(value, abs_err, "series", n)
    cf, n = _cf_value(s, x)
    upper = cf * math.exp(s * math.log(x) - x)
    value = gamma_fn(s) - upper
    abs_err = 8.0 * _EPS * gamma_fn(s)
    return EvalResult(value, abs_err, "continued-fraction", n)


def regularized_p(s: float, x: float) -> EvalResult:
    """Regularized lower incomplete gamma P(s,x) = gamma(s,x)/Gamma(s) in [0,1]."""
    _check_gamma_args(s, x)
    if x == 0.0:
        return EvalResult(0.0, 0.0, "series", 0)
    lg = ln_gamma(s)
    if x <= s + 1.0:
        total, last, n = _series_sum(s, x)
        scale = math.exp(s * math.log(x) - x - lg)
        value = total * scale
        abs_err = abs(last) * scale + 4.0 * _EPS * abs(value)
        method = "series"
    else:
        cf, n = _cf_value(s, x)
        q = cf * math.exp(s * math.log(x) - x - lg)
        value = 1.0 - q
        abs_err = 8.0 * _EPS
        method = "continued-fraction"
    value = min(1.0, max(0.0, value))
    return EvalResult(value, abs_err, method, n)


def p_saturation_threshold(s: float) -> float:
    """An x beyond which P(s, x) > 1 - 1e-12, so gamma(s,x) is Gamma(s)."""
    return s + 40.0 * math.sqrt(s) + 40.0


def erf(x: float) -> EvalResult:
    """Error function; odd by construction (reflection for x < 0)."""
    _require_finite("x", x)
    if x == 0.0:
        return EvalResult(0.0, 0.0, "closed-form", 0)
    if x < 0.0:
        r = erf(-x)
        return EvalResult(-r.value, r.abs_err, r.method, r.evals)
    if x <= 0.5:
        return regularized_p(0.5, x * x)
    c = erfc(x)
    return EvalResult(1.0 - c.value, c.abs_err + _EPS, c.method, c.evals)


#: erfc underflows to zero (smallest subnormal) beyond this argument.
_ERFC_UNDERFLOW_X = 28.0

#: Past this the one-term asymptotic 1/(x sqrt(pi)) is exact to an ulp.
_ERFCX_ASYMPTOTIC_X = 6.71e7


def erfc(x: float) -> EvalResult:
    """Complementary error function, cancellation-free for x > 0.5."""
    _require_finite("x", x)
    if x == 0.0:
        return EvalResult(1.0, 0.0, "closed-form", 0)
    if x <= 0.5:
        # includes negative x, where erfc grows toward 2 and 1 - erf is benign
        r = erf(x)
        return EvalResult(1.0 - r.value, r.abs_err + _EPS, r.method, r.evals)
    if x >= _ERFC_UNDERFLOW_X:
        return EvalResult(0.0, 5e-324, "closed-form", 0)
    xx = x * x
    cf, n = _cf_value(0.5, xx)
    value = cf * math.exp(0.5 * math.log(xx) - xx) / SQRT_PI
    return EvalResult(value, 8.0 * _EPS * value, "continued-fraction", n)


def erfcx(x: float) -> EvalResult:
    """Scaled complement exp(x^2) erfc(x) for x >= 0, overflow-free.

    For x > 0.5 the exp(x^2) factor cancels exactly against the continued
    fraction's prefactor, leaving x * cf / sqrt(pi).
    """
    _require_finite("x", x)
    if x < 0.0:
        raise DomainError(f"erfcx requires x >= 0, got {x!r}")
    if x == 0.0:
        return EvalResult(1.0, 0.0, "closed-form", 0)
    if x <= 0.5:
        c = erfc(x)
        value = math.exp(x * x) * c.value
        return EvalResult(value, math.exp(x * x) * c.abs_err + 2.0 * _EPS * value,
                          c.method, c.evals)
    if x >= _ERFCX_ASYMPTOTIC_X:
        value = 1.0 / (x * SQRT_PI)
        return EvalResult(value, 2.0 * _EPS * value, "closed-form", 0)
    cf, n = _cf_value(0.5, x * x)
    value = x * cf / SQRT_PI
    return EvalResult(value, 8.0 * _EPS * value, "continued-fraction", n)
