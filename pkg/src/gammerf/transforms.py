"""The erfc-weighted integral operators and their closed forms.

Each reduction can be evaluated through up to three independent routes:

* ``theta``: a trigonometric integral over [0, pi/2] of the pair's F,
* ``s``: the equivalent s-domain integral (evaluated through a hyperbolic
  substitution that removes the square-root endpoint singularity),
* ``time``: brute-force quadrature of the defining time-domain integral.

The exponentially weighted time-domain route multiplies through the scaled
complement erfcx, so e^(a^2 t) erfc(a sqrt(t)) never overflows.
"""

import enum
import math

from .errors import DomainError
from .kernel import SQRT_PI, erf, erfc, erfcx, gamma_fn, ln_gamma
from .laplace import TransformPair
from .quadrature import (
    DEFAULT_CONFIG,
    QuadConfig,
    finite_interval,
    half_line,
    integrate,
)
from .result import EvalResult

_EPS = 2.0 ** -52
_EXP_OVERFLOW = 709.0
_HALF_PI = math.pi / 2.0


class ReductionForm(str, enum.Enum):
    """Which route of a reduction to evaluate."""

    THETA = "theta"
    S = "s"
    TIME = "time"


def _scaled(r: EvalResult, c: float) -> EvalResult:
    value = c * r.value
    return EvalResult(value, abs(c) * r.abs_err + 2.0 * _EPS * abs(value),
                      r.method, r.evals)


def _closed(value: float, evals: int = 0) -> EvalResult:
    return EvalResult(value, 4.0 * _EPS * abs(value), "closed-form", evals)


def _check_a(a: float):
    if not (math.isfinite(a) and a > 0.0):
        raise DomainError(f"scale parameter a must be finite and > 0, got {a!r}")


def erfc_weighted_integral(pair: TransformPair, a: float,
                           form: ReductionForm | str,
                           cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """The integral of f(t) erfc(a sqrt(t)) over t > 0, by the chosen route."""
    _check_a(a)
    form = ReductionForm(form)
    a2 = a * a

    if form in (ReductionForm.THETA, ReductionForm.S):
        if not pair.sigma0 < a2:
            raise DomainError(
                f"{pair.label()}: reduction requires sigma0 < a^2 = {a2:g}, "
                f"but sigma0 = {pair.sigma0:g}")

    if form is ReductionForm.THETA:
        def g(th: float) -> float:
            c = math.cos(th)
            c2 = c * c
            s_arg = math.inf if c2 == 0.0 else a2 / c2
            return pair.F(s_arg)

        r = integrate(g, finite_interval(0.0, _HALF_PI), cfg)
        return _scaled(r, 2.0 / math.pi)

    if form is ReductionForm.S:
        # s = a cosh(u) turns the 1/sqrt(s^2 - a^2) endpoint blow-up into a
        # smooth integrand F(a^2 cosh^2 u)/cosh(u) on [0, inf).
        def g(u: float) -> float:
            if u > _EXP_OVERFLOW:
                return 0.0  # sech underflows; F is bounded on [a^2, inf)
            eu = math.exp(u)
            ch = 0.5 * (eu + 1.0 / eu)
            s_arg = (a * ch) * (a * ch)  # inf beyond the float range is fine
            return pair.F(s_arg) / ch

        r = integrate(g, half_line(0.0), cfg)
        return _scaled(r, 2.0 / math.pi)

    # time domain
    if pair.time_kind == "dirac":
        b = pair.impulse_location
        r = erfc(a * math.sqrt(b))
        return EvalResult(r.value, r.abs_err, "closed-form", r.evals)
    if not pair.sigma0 < a2:
        raise DomainError(
            f"{pair.label()}: time-domain integral of f(t) erfc(a sqrt(t)) "
            f"diverges unless sigma0 < a^2 = {a2:g}; sigma0 = {pair.sigma0:g}")

    def g(t: float) -> float:
        w = erfc(a * math.sqrt(t)).value
        if w <= 0.0:
            return 0.0
        e = pair.log_f(t) + math.log(w)
        return math.exp(e) if e < _EXP_OVERFLOW else math.inf

    r = integrate(g, half_line(0.0, singular_lower=pair.singular_at_zero), cfg)
    return r


#: Power pairs admit the exponentially weighted reduction only on this window:
#: below r = -1 the time-domain integral diverges at 0, above r = -1/2 at
#: infinity (the weighted tail behaves like t^(r - 1/2)).
EXP_POWER_WINDOW = (-1.0, -0.5)


def _exp_power_window_ok(r: float) -> bool:
    lo, hi = EXP_POWER_WINDOW
    return lo < r < hi


def erfc_weighted_exp_integral(pair: TransformPair, a: float,
                               form: ReductionForm | str,
                               cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """The integral of e^(a^2 t) f(t) erfc(a sqrt(t)) over t > 0."""
    _check_a(a)
    form = ReductionForm(form)
    a2 = a * a
    is_dirac = pair.time_kind == "dirac"

    if form is ReductionForm.THETA:
        # The argument a^2 tan^2(theta) sweeps down to 0, so sigma0 >= 0
        # forbids theta-form under exp weighting.
        if not (is_dirac or pair.sigma0 < 0.0):
            raise DomainError(
                f"{pair.label()}: sigma0 >= 0 forbids theta-form under exp "
                f"weighting (the integrand needs F at 0); sigma0 = {pair.sigma0:g}")

        def g(th: float) -> float:
            s = math.sin(th)
            c = math.cos(th)
            c2 = c * c
            s_arg = math.inf if c2 == 0.0 else a2 * (s * s) / c2
            return pair.F(s_arg)

        r = integrate(g, finite_interval(0.0, _HALF_PI), cfg)
        return _scaled(r, 2.0 / math.pi)

    if form is ReductionForm.S:
        # s = a tan(theta) maps [0, pi/2) onto s in [0, inf), so the
        # s-integral runs from 0, not a.
        if is_dirac or pair.sigma0 < 0.0:
            def g(s: float) -> float:
                s2 = s * s
                return pair.F(s2) / (s2 + a2)

            r = integrate(g, half_line(0.0), cfg)
            return _scaled(r, 2.0 * a / math.pi)
        if pair.name == "power":
            rr = pair.params["r"]
            if not _exp_power_window_ok(rr):
                raise DomainError(
                    f"{pair.label()}: the exponentially weighted reduction of a "
                    f"power pair needs r in ({EXP_POWER_WINDOW[0]:g}, "
                    f"{EXP_POWER_WINDOW[1]:g}); got r = {rr:g}")
            lg = ln_gamma(rr + 1.0)
            expo = 2.0 * rr + 2.0

            def g(s: float) -> float:
                e = lg - expo * math.log(s)
                num = math.exp(e) if e < _EXP_OVERFLOW else math.inf
                return num / (s * s + a2)

            r = integrate(g, half_line(0.0, singular_lower=True), cfg)
            return _scaled(r, 2.0 * a / math.pi)
        raise DomainError(
            f"{pair.label()}: s-form under exp weighting requires sigma0 < 0, "
            f"a Dirac pair, or a power pair inside the convergent window")

    # time domain: multiply through erfcx so the e^(a^2 t) factor cancels
    if is_dirac:
        b = pair.impulse_location
        r = erfcx(a * math.sqrt(b))
        return EvalResult(r.value, r.abs_err, "closed-form", r.evals)
    if pair.name == "power":
        rr = pair.params["r"]
        if not _exp_power_window_ok(rr):
            raise DomainError(
                f"{pair.label()}: time-domain integral of t^r e^(a^2 t) "
                f"erfc(a sqrt(t)) diverges outside r in ({EXP_POWER_WINDOW[0]:g}, "
                f"{EXP_POWER_WINDOW[1]:g}); the weighted tail behaves like "
                f"t^(r-1/2); got r = {rr:g}")
    elif not pair.sigma0 < 0.0:
        raise DomainError(
            f"{pair.label()}: time-domain exp-weighted integral requires "
            f"sigma0 < 0; sigma0 = {pair.sigma0:g}")

    def g(t: float) -> float:
        w = erfcx(a * math.sqrt(t)).value
        e = pair.log_f(t) + math.log(w)
        return math.exp(e) if e < _EXP_OVERFLOW else math.inf

    r = integrate(g, half_line(0.0, singular_lower=pair.singular_at_zero), cfg)
    return r


def erfc_moment(r: float, a: float) -> float:
    """Closed form of the integral of t^r erfc(a sqrt(t)) over t > 0."""
    if not (math.isfinite(r) and r > -1.0):
        raise DomainError(f"erfc_moment requires r > -1, got r = {r!r}")
    _check_a(a)
    return gamma_fn(r + 1.5) / (a ** (2.0 * r + 2.0) * SQRT_PI * (1.0 + r))


def erfc_linear_moment(mu: float, a: float) -> float:
    """Closed form of the integral of t^mu erfc(a t) over t > 0."""
    if not (math.isfinite(mu) and mu > -1.0):
        raise DomainError(f"erfc_linear_moment requires mu > -1, got mu = {mu!r}")
    _check_a(a)
    return gamma_fn(1.0 + 0.5 * mu) / (SQRT_PI * a ** (mu + 1.0) * (1.0 + mu))


def _check_ab(a: float, b: float):
    _check_a(a)
    if not (math.isfinite(b) and b > 0.0):
        raise DomainError(f"parameter b must be finite and > 0, got {b!r}")


def gauss_singular_integral(a: float, b: float,
                            cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Quadrature of e^(-b^2 t^2) / (t sqrt(t^2 - a^2)) over t > a.

    Evaluated in the shifted variable d = t - a so the square-root factor
    t^2 - a^2 = d (2a + d) is computed without cancellation near t = a.
    """
    _check_ab(a, b)

    def g(d: float) -> float:
        t = a + d
        core = d * (2.0 * a + d)
        den = t * math.sqrt(core)
        if den == 0.0 or math.isinf(den):
            return 0.0
        z = (b * t) * (b * t)
        return math.exp(-z) / den if z < 745.0 else 0.0

    return integrate(g, half_line(0.0, singular_lower=True), cfg)


def gauss_singular_closed(a: float, b: float) -> float:
    """Closed form (pi / 2a) erfc(a b) of the singular Gaussian integral."""
    _check_ab(a, b)
    return _HALF_PI / a * erfc(a * b).value


def gauss_lorentz_integral(a: float, b: float,
                           cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Quadrature of e^(-b^2 t^2) / (t^2 + a^2) over t > 0."""
    _check_ab(a, b)

    def g(t: float) -> float:
        z = (b * t) * (b * t)
        num = math.exp(-z) if z < 745.0 else 0.0
        if num == 0.0:
            return 0.0
        return num / (t * t + a * a)

    return integrate(g, half_line(0.0), cfg)


def gauss_lorentz_closed(a: float, b: float) -> float:
    """Closed form (pi / 2a) e^(a^2 b^2) erfc(a b), computed through erfcx.

    The direct product overflows once a*b exceeds about 27; the scaled
    complement keeps it finite over the whole parameter range.
    """
    _check_ab(a, b)
    return _HALF_PI / a * erfcx(a * b).value


def exp_erfc_moment_rhs(r: float, a: float,
                        cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """The s-domain side of the exponentially weighted power moment:
    (2 a Gamma(r+1) / pi) times the integral of 1 / (s^(2r+2) (s^2 + a^2))
    over s > 0.

    Converges for -3/2 < r < -1/2 (excluding the Gamma pole at r = -1): at
    the lower boundary the tail stops decaying, at the upper one the s = 0
    endpoint stops being integrable.
    """
    if not (math.isfinite(r) and -1.5 < r < -0.5):
        raise DomainError(
            f"exp_erfc_moment_rhs requires -3/2 < r < -1/2 (the s-integral "
            f"diverges at infinity below, at s = 0 above), got r = {r!r}")
    if r == -1.0:
        raise DomainError("exp_erfc_moment_rhs is undefined at r = -1 "
                          "(Gamma(r+1) pole)")
    _check_a(a)
    if r > -1.0:
        coef_gamma = gamma_fn(r + 1.0)
    else:
        coef_gamma = gamma_fn(r + 2.0) / (r + 1.0)
    expo = 2.0 * r + 2.0

    def g(s: float) -> float:
        e = -expo * math.log(s)
        num = math.exp(e) if e < _EXP_OVERFLOW else math.inf
        return num / (s * s + a * a)

    quad = integrate(g, half_line(0.0, singular_lower=expo > 0.0), cfg)
    return _scaled(quad, 2.0 * a * coef_gamma / math.pi)
