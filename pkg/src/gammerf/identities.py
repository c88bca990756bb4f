"""The catalog of verified identities I1..I19 and the grid runner.

Every identity is encoded as two (sometimes three) independently evaluable
routes over an explicit parameter domain.  The routes never share a code
path: one side is a closed form or a kernel evaluation, the other a
quadrature, or the two sides are quadratures of different geometries.

Integrals over [0, pi/2] whose integrand is singular or carries its mass at
the upper endpoint are folded at pi/4, rewriting the upper half in the
complementary angle.  That keeps every singular endpoint at 0, where the
double-exponential nodes are exact, instead of at pi/2 where float absorption
would cap the achievable accuracy.
"""

import itertools
import math
import time
from dataclasses import dataclass, field
from typing import Callable, Mapping, Optional

from . import kernel, transforms
from .errors import ConvergenceError, DomainError, IntegrandError
from .kernel import (
    erf,
    erfc,
    erfcx,
    gamma_fn,
    ln_gamma,
    lower_gamma,
    p_saturation_threshold,
    regularized_p,
)
from .laplace import default_registry
from .quadrature import QuadConfig, finite_interval, half_line, integrate
from .records import CheckRecord, SkippedPoint, compare_values, failed_record
from .result import EvalResult
from .transforms import ReductionForm

_EPS = 2.0 ** -52
_HALF_PI = math.pi / 2.0
_QUARTER_PI = math.pi / 4.0

# Identity-suite quadratures converge on relative error alone: several
# identities have genuinely tiny two-sided values, and the non-negative
# integrands here never need the near-zero absolute floor.
_QUAD = QuadConfig(rel_tol=1e-10, abs_tol=1e-300, max_level=12, max_evals=300_000)
_QUAD_TIGHT = QuadConfig(rel_tol=1e-13, abs_tol=1e-300, max_level=12,
                         max_evals=500_000)


@dataclass(frozen=True)
class Constraint:
    """One decidable domain condition with a human-readable description."""

    description: str
    holds: Callable[[Mapping[str, float]], bool] = field(compare=False)


@dataclass(frozen=True)
class IdentitySpec:
    """One identity: routes, parameter domain, default grid, tolerances."""

    id: str
    description: str
    param_names: tuple
    constraints: tuple
    routes: tuple  # ((label, evaluator(params) -> EvalResult), ...)
    tol_rel: float
    tol_abs: float
    default_grid: dict
    notes: str = ""

    @property
    def lhs(self):
        return self.routes[0][1]

    @property
    def rhs(self):
        return self.routes[1][1]

    def violated_constraint(self, params: Mapping[str, float]) -> Optional[str]:
        for c in self.constraints:
            if not c.holds(params):
                return c.description
        return None


@dataclass
class GridResult:
    """Records plus skip notations from one grid run of one identity."""

    identity: str
    records: list
    skipped: list

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def failed(self) -> int:
        return sum(1 for r in self.records if not r.passed)


def _pos(name):
    return Constraint(f"{name} must be > 0",
                      lambda p, n=name: math.isfinite(p[n]) and p[n] > 0.0)


def _nonneg(name):
    return Constraint(f"{name} must be >= 0",
                      lambda p, n=name: math.isfinite(p[n]) and p[n] >= 0.0)


def _open_interval(name, lo, hi):
    return Constraint(
        f"{name} must lie in the open interval ({lo:g}, {hi:g})",
        lambda p, n=name: math.isfinite(p[n]) and lo < p[n] < hi)


def _kernel_value(value: float, err: float, method: str = "closed-form",
                  evals: int = 0) -> EvalResult:
    return EvalResult(value, err, method, evals)


def _closed(value: float) -> EvalResult:
    return EvalResult(value, 4.0 * _EPS * abs(value), "closed-form", 0)


def _fold_sum(f_low, f_high, scale: float, cfg: QuadConfig,
              singular_low: bool = True, singular_high: bool = True) -> EvalResult:
    """scale * (integral of f_low + integral of f_high), each on [0, pi/4]."""
    i1 = integrate(f_low, finite_interval(0.0, _QUARTER_PI,
                                          singular_lower=singular_low), cfg)
    i2 = integrate(f_high, finite_interval(0.0, _QUARTER_PI,
                                           singular_lower=singular_high), cfg)
    value = scale * (i1.value + i2.value)
    err = abs(scale) * (i1.abs_err + i2.abs_err) + 2.0 * _EPS * abs(value)
    return EvalResult(value, err, "quadrature", i1.evals + i2.evals)


def _log_grid(lo: float, hi: float, n: int) -> tuple:
    ratio = hi / lo
    return tuple(lo * ratio ** (i / (n - 1)) for i in range(n))


_SHAPE_GRID = (0.25, 0.5, 1.0, 2.5, 5.0)
_X_GRID = _log_grid(0.01, 50.0, 15)
_X_GRID_SMOKE = (0.0,) + _X_GRID
_A_SMALL = (0.5, 1.0, 2.0)
_A_MOMENT = (0.5, 1.0, 3.0)
_R_MOMENT = (-0.5, 0.0, 0.5, 1.0, 2.0)
_ETA_GRID = (0.5, 1.0, 3.0)
_UNIT_OPEN_GRID = (0.1, 0.25, 0.5, 0.75, 0.9)
_I9_T = (0.0, 0.01, 0.1, 1.0, 10.0)
_I16_R = (-0.9, -0.75, -0.6, -0.4, 0.0)
_GAUSS_AB = (0.5, 1.0, 2.0)

_REGISTRY = default_registry()
_PAIR_INDEX_DESC = ("pair must be an integer index into the default registry: "
                    + ", ".join(f"{i}={p.label()}"
                                for i, p in enumerate(_REGISTRY)))


def _pair_index_ok(p):
    v = p["pair"]
    return math.isfinite(v) and v == int(v) and 0 <= int(v) < len(_REGISTRY)


def _registry_pair(params):
    return _REGISTRY[int(params["pair"])]


def _xse(s: float, x: float) -> float:
    """x^s e^-x without intermediate overflow; zero at x = 0 (s > 0)."""
    if x == 0.0:
        return 0.0
    return math.exp(s * math.log(x) - x)


# --- I1: recurrence --------------------------------------------------------

def _i1_lhs(p):
    return lower_gamma(p["s"] + 1.0, p["x"])


def _i1_rhs(p):
    s, x = p["s"], p["x"]
    g = lower_gamma(s, x)
    term = _xse(s, x)
    value = s * g.value - term
    err = s * g.abs_err + 2.0 * _EPS * (abs(s * g.value) + abs(term))
    return EvalResult(value, err, g.method, g.evals)


# --- I2, I3: closed forms for integer and half-integer shape ---------------

def _i2_lhs(p):
    return lower_gamma(1.0, p["x"])


def _i2_rhs(p):
    v = -math.expm1(-p["x"])
    return _closed(v)


def _i3_lhs(p):
    return lower_gamma(0.5, p["x"])


def _i3_rhs(p):
    x = p["x"]
    if x == 0.0:
        return _closed(0.0)
    root = math.sqrt(x)
    r = integrate(lambda u: math.exp(-u * u), finite_interval(0.0, root),
                  _QUAD_TIGHT)
    return EvalResult(2.0 * r.value, 2.0 * r.abs_err, "quadrature", r.evals)


# --- I4: Mellin-type integral of the lower incomplete gamma ----------------

def _i4_lhs(p):
    a, b = p["a"], p["b"]

    def f(x):
        g = lower_gamma(b, x).value
        if g <= 0.0:
            return 0.0
        return math.exp((a - 1.0) * math.log(x) + math.log(g))

    return integrate(f, half_line(0.0, singular_lower=True), _QUAD)


def _i4_rhs(p):
    return _closed(-gamma_fn(p["a"] + p["b"]) / p["a"])


# --- I5: Gaussian power integral -------------------------------------------

def _i5_lhs(p):
    s, a, t = p["s"], p["a"], p["t"]

    def f(r):
        return math.pow(r, s) * math.exp(-(a * r) * (a * r))

    return integrate(f, finite_interval(0.0, math.sqrt(t)), _QUAD)


def _i5_rhs(p):
    s, a, t = p["s"], p["a"], p["t"]
    g = lower_gamma(0.5 * (s + 1.0), a * a * t)
    scale = 1.0 / (2.0 * a ** (s + 1.0))
    return EvalResult(scale * g.value, scale * g.abs_err + 2.0 * _EPS,
                      g.method, g.evals)


# --- I6: scaling property ---------------------------------------------------

def _i6_lhs(p):
    x, eta, xi = p["x"], p["eta"], p["xi"]
    scale = eta ** x

    def f(t):
        return math.exp((x - 1.0) * math.log(t) - eta * t)

    r = integrate(f, finite_interval(0.0, xi, singular_lower=x < 1.0), _QUAD)
    value = scale * r.value
    return EvalResult(value, scale * r.abs_err + 2.0 * _EPS * abs(value),
                      "quadrature", r.evals)


def _i6_rhs(p):
    return lower_gamma(p["x"], p["eta"] * p["xi"])


# --- I7: theta-integral representation --------------------------------------

def _saturating_p(shape: float):
    """P(shape, w) with a short-circuit to 1 beyond the saturation threshold."""
    sat = p_saturation_threshold(shape)

    def P(w: float) -> float:
        if w > sat or math.isinf(w):
            return 1.0
        return regularized_p(shape, w).value

    return P


def _i7_lhs(p):
    a, t = p["a"], p["t"]
    g = lower_gamma(a, t)
    gb = gamma_fn(p["b"])
    value = g.value * gb
    return EvalResult(value, g.abs_err * gb + 2.0 * _EPS * abs(value),
                      g.method, g.evals)


def _i7_rhs(p):
    a, b, t = p["a"], p["b"], p["t"]
    shape = a + b
    gab = gamma_fn(shape)
    P = _saturating_p(shape)
    ea = 2.0 * a - 1.0
    eb = 2.0 * b - 1.0

    def g_low(th):
        c = math.cos(th)
        s = math.sin(th)
        return P(t / (c * c)) * math.pow(c, ea) * math.pow(s, eb)

    def g_high(ph):
        c = math.cos(ph)
        s = math.sin(ph)
        s2 = s * s
        w = math.inf if s2 == 0.0 else t / s2
        return P(w) * math.pow(s, ea) * math.pow(c, eb)

    return _fold_sum(g_low, g_high, 2.0 * gab, _QUAD)


# --- I8: beta function as a trigonometric integral --------------------------

def _i8_lhs(p):
    a, b = p["a"], p["b"]
    value = math.exp(ln_gamma(a) + ln_gamma(b) - ln_gamma(a + b))
    return _closed(value)


def _i8_rhs(p):
    a, b = p["a"], p["b"]
    ea = 2.0 * a - 1.0
    eb = 2.0 * b - 1.0

    def g_low(th):
        return math.pow(math.cos(th), ea) * math.pow(math.sin(th), eb)

    def g_high(ph):
        return math.pow(math.sin(ph), ea) * math.pow(math.cos(ph), eb)

    return _fold_sum(g_low, g_high, 2.0, _QUAD)


# --- I9: incomplete reflection extension, both displayed forms --------------

def _i9_lhs(p):
    a, t = p["a"], p["t"]
    g = lower_gamma(a, t)
    g1a = gamma_fn(1.0 - a)
    value = g.value * g1a
    return EvalResult(value, g.abs_err * g1a + 2.0 * _EPS * abs(value),
                      g.method, g.evals)


def _i9_cot_pieces(a, t, weight):
    """Folded [0, pi/2] integral of weight(t sec^2) cot^(2a-1)."""
    e = 2.0 * a - 1.0

    def g_low(th):
        c = math.cos(th)
        s = math.sin(th)
        return weight(t / (c * c)) * math.pow(c / s, e)

    def g_high(ph):
        c = math.cos(ph)
        s = math.sin(ph)
        s2 = s * s
        w = math.inf if s2 == 0.0 else t / s2
        return weight(w) * math.pow(s / c, e)

    return _fold_sum(g_low, g_high, 2.0, _QUAD)


def _exp_neg(z: float) -> float:
    return 0.0 if z > 745.0 or math.isinf(z) else math.exp(-z)


def _i9_direct(p):
    a, t = p["a"], p["t"]
    return _i9_cot_pieces(a, t, lambda w: -math.expm1(-w) if w < math.inf else 1.0)


def _i9_reflection(p):
    a, t = p["a"], p["t"]
    tail = _i9_cot_pieces(a, t, _exp_neg)
    value = math.pi / math.sin(math.pi * a) - tail.value
    return EvalResult(value, tail.abs_err + 2.0 * _EPS * abs(value),
                      "quadrature", tail.evals)


# --- I10: Mellin integral of 1 - e^-t ---------------------------------------

def _i10_lhs(p):
    a = p["a"]

    def f(t):
        m = -math.expm1(-t)
        if m <= 0.0:
            return 0.0
        return math.exp((a - 1.0) * math.log(t) + math.log(m))

    return integrate(f, half_line(0.0, singular_lower=True), _QUAD)


def _i10_rhs(p):
    a = p["a"]
    return _closed(-gamma_fn(a + 1.0) / a)


# --- I11: erf through the theta representation ------------------------------

def _i11_kernel(p):
    r = erf(math.sqrt(p["a"] * p["t"]))
    return r


def _i11_general_b(p):
    a, t, b = p["a"], p["t"], p["b"]
    at = a * t
    shape = 0.5 + b
    gc = gamma_fn(shape)
    P = _saturating_p(shape)
    eb = 2.0 * b - 1.0

    def g_low(th):
        c = math.cos(th)
        return P(at / (c * c)) * math.pow(math.sin(th), eb)

    def g_high(ph):
        s = math.sin(ph)
        s2 = s * s
        w = math.inf if s2 == 0.0 else at / s2
        return P(w) * math.pow(math.cos(ph), eb)

    scale = 2.0 * gc / (kernel.SQRT_PI * gamma_fn(b))
    return _fold_sum(g_low, g_high, scale, _QUAD,
                     singular_low=False, singular_high=False)


def _i11_complement(p):
    at = p["a"] * p["t"]

    def g(th):
        c = math.cos(th)
        c2 = c * c
        z = math.inf if c2 == 0.0 else at / c2
        return _exp_neg(z)

    r = integrate(g, finite_interval(0.0, _HALF_PI), _QUAD)
    value = 1.0 - 2.0 / math.pi * r.value
    return EvalResult(value, 2.0 / math.pi * r.abs_err + 2.0 * _EPS,
                      "quadrature", r.evals)


# --- I12: scaled complement through the tan^2 integral -----------------------

def _i12_lhs(p):
    return erfcx(math.sqrt(p["a"] * p["t"]))


def _i12_rhs(p):
    at = p["a"] * p["t"]

    def g(th):
        s = math.sin(th)
        c = math.cos(th)
        c2 = c * c
        z = math.inf if c2 == 0.0 else at * (s * s) / c2
        return _exp_neg(z)

    r = integrate(g, finite_interval(0.0, _HALF_PI), _QUAD)
    return EvalResult(2.0 / math.pi * r.value, 2.0 / math.pi * r.abs_err,
                      "quadrature", r.evals)


# --- I13 / I15: reduction form agreement ------------------------------------

def _i13_route(form):
    def route(p):
        return transforms.erfc_weighted_integral(
            _registry_pair(p), p["a"], form, _QUAD)
    return route


def _i15_route(form):
    def route(p):
        return transforms.erfc_weighted_exp_integral(
            _registry_pair(p), p["a"], form, _QUAD)
    return route


# --- I14: closed moment formulas vs time-domain quadrature ------------------

def _i14_closed(p):
    r, a = p["r"], p["a"]
    if p["kind"] == 0.0:
        return _closed(transforms.erfc_moment(r, a))
    return _closed(transforms.erfc_linear_moment(r, a))


def _i14_quad(p):
    r, a = p["r"], p["a"]
    if p["kind"] == 0.0:
        from .laplace import make_power
        return transforms.erfc_weighted_integral(
            make_power(r), a, ReductionForm.TIME, _QUAD)

    def f(t):
        arg = a * t
        if not arg < 28.0:  # erfc underflows; the product a*t may be inf
            return 0.0
        w = erfc(arg).value
        if w <= 0.0:
            return 0.0
        return math.exp(r * math.log(t) + math.log(w))

    return integrate(f, half_line(0.0, singular_lower=r < 0.0), _QUAD)


# --- I16: exponentially weighted moment on its convergent window ------------

def _i16_lhs(p):
    from .laplace import make_power
    return transforms.erfc_weighted_exp_integral(
        make_power(p["r"]), p["a"], ReductionForm.TIME, _QUAD)


def _i16_rhs(p):
    return transforms.exp_erfc_moment_rhs(p["r"], p["a"], _QUAD)


# --- I17 / I18: Gaussian specializations -------------------------------------

def _i17_lhs(p):
    return transforms.gauss_singular_integral(p["a"], p["b"], _QUAD)


def _i17_rhs(p):
    return _closed(transforms.gauss_singular_closed(p["a"], p["b"]))


def _i18_lhs(p):
    return transforms.gauss_lorentz_integral(p["a"], p["b"], _QUAD)


def _i18_rhs(p):
    return _closed(transforms.gauss_lorentz_closed(p["a"], p["b"]))


# --- I19: reflection formula -------------------------------------------------

def _i19_lhs(p):
    a = p["a"]
    return _closed(math.exp(ln_gamma(a) + ln_gamma(1.0 - a)))


def _i19_rhs(p):
    return _closed(math.pi / math.sin(math.pi * p["a"]))


_I16_WINDOW_NOTE = (
    "Admissible window restricted to -1 < r < -1/2. For r >= -1/2 the "
    "exponentially weighted integrand t^r e^(a^2 t) erfc(a sqrt(t)) behaves "
    "like t^(r-1/2)/(a sqrt(pi)) at infinity, so the time-domain integral "
    "diverges even though the s-domain side converges for all r > -3/2; the "
    "wider range sometimes quoted for this moment formula is not verifiable.")


def _build_catalog() -> tuple:
    specs = []

    specs.append(IdentitySpec(
        id="I1",
        description="gamma(s+1,x) = s gamma(s,x) - x^s e^-x",
        param_names=("s", "x"),
        constraints=(_pos("s"), _nonneg("x")),
        routes=(("kernel(s+1)", _i1_lhs), ("recurrence(s)", _i1_rhs)),
        tol_rel=1e-10, tol_abs=1e-30,
        default_grid={"s": _SHAPE_GRID, "x": _X_GRID},
    ))

    specs.append(IdentitySpec(
        id="I2",
        description="gamma(1,x) = 1 - e^-x",
        param_names=("x",),
        constraints=(_nonneg("x"),),
        routes=(("kernel", _i2_lhs), ("closed", _i2_rhs)),
        tol_rel=1e-12, tol_abs=1e-30,
        default_grid={"x": _X_GRID},
    ))

    specs.append(IdentitySpec(
        id="I3",
        description="gamma(1/2,x) = sqrt(pi) erf(sqrt(x)) "
                    "(right side by quadrature of the Gaussian)",
        param_names=("x",),
        constraints=(_nonneg("x"),),
        routes=(("kernel", _i3_lhs), ("quadrature", _i3_rhs)),
        tol_rel=1e-11, tol_abs=1e-30,
        default_grid={"x": _X_GRID},
    ))

    specs.append(IdentitySpec(
        id="I4",
        description="integral of x^(a-1) gamma(b,x) over x > 0 equals "
                    "-Gamma(a+b)/a, for -1 < a < 0, a + b > 0",
        param_names=("a", "b"),
        constraints=(_open_interval("a", -1.0, 0.0), _pos("b"),
                     Constraint("a + b must be > 0",
                                lambda p: p["a"] + p["b"] > 0.0)),
        routes=(("quadrature", _i4_lhs), ("closed", _i4_rhs)),
        tol_rel=1e-6, tol_abs=1e-30,
        default_grid={"a": (-0.5, -0.25, -0.75), "b": (1.0, 0.5, 2.0)},
    ))

    specs.append(IdentitySpec(
        id="I5",
        description="integral of r^s e^(-(a r)^2) over [0, sqrt(t)] equals "
                    "gamma((s+1)/2, a^2 t) / (2 a^(s+1))",
        param_names=("s", "a", "t"),
        constraints=(Constraint("s must be > -1",
                                lambda p: math.isfinite(p["s"]) and p["s"] > -1.0),
                     _pos("a"), _pos("t")),
        routes=(("quadrature", _i5_lhs), ("kernel", _i5_rhs)),
        tol_rel=1e-9, tol_abs=1e-30,
        default_grid={"s": _SHAPE_GRID, "a": _SHAPE_GRID, "t": _X_GRID},
    ))

    specs.append(IdentitySpec(
        id="I6",
        description="eta^x times the integral of t^(x-1) e^(-eta t) over "
                    "[0, xi] equals gamma(x, eta xi)",
        param_names=("x", "eta", "xi"),
        constraints=(_pos("x"), _pos("eta"), _pos("xi")),
        routes=(("quadrature", _i6_lhs), ("kernel", _i6_rhs)),
        tol_rel=1e-9, tol_abs=1e-30,
        default_grid={"x": _SHAPE_GRID, "eta": _ETA_GRID, "xi": _ETA_GRID},
    ))

    specs.append(IdentitySpec(
        id="I7",
        description="gamma(a,t) Gamma(b) = 2 int_0^(pi/2) gamma(a+b, t sec^2) "
                    "cos^(2a-1) sin^(2b-1)",
        param_names=("a", "b", "t"),
        constraints=(_pos("a"), _pos("b"), _nonneg("t")),
        routes=(("kernel", _i7_lhs), ("theta-quadrature", _i7_rhs)),
        tol_rel=1e-8, tol_abs=1e-12,
        default_grid={"a": _SHAPE_GRID, "b": _SHAPE_GRID, "t": _X_GRID_SMOKE},
    ))

    specs.append(IdentitySpec(
        id="I8",
        description="beta(a,b) = Gamma(a) Gamma(b) / Gamma(a+b) = "
                    "2 int_0^(pi/2) cos^(2a-1) sin^(2b-1)",
        param_names=("a", "b"),
        constraints=(_pos("a"), _pos("b")),
        routes=(("kernel", _i8_lhs), ("theta-quadrature", _i8_rhs)),
        tol_rel=1e-9, tol_abs=1e-30,
        default_grid={"a": _SHAPE_GRID, "b": _SHAPE_GRID},
    ))

    specs.append(IdentitySpec(
        id="I9",
        description="gamma(a,t) Gamma(1-a) equals both "
                    "2 int (1 - e^(-t sec^2)) cot^(2a-1) and "
                    "pi csc(pi a) - 2 int e^(-t sec^2) cot^(2a-1)",
        param_names=("a", "t"),
        constraints=(_open_interval("a", 0.0, 1.0), _nonneg("t")),
        routes=(("kernel", _i9_lhs), ("direct-theta", _i9_direct),
                ("reflection-theta", _i9_reflection)),
        tol_rel=1e-7, tol_abs=1e-8,
        default_grid={"a": _UNIT_OPEN_GRID, "t": _I9_T},
    ))

    specs.append(IdentitySpec(
        id="I10",
        description="integral of (1 - e^-t) t^(a-1) over t > 0 equals "
                    "-Gamma(a+1)/a for -1 < a < 0",
        param_names=("a",),
        constraints=(_open_interval("a", -1.0, 0.0),),
        routes=(("quadrature", _i10_lhs), ("closed", _i10_rhs)),
        tol_rel=1e-7, tol_abs=1e-30,
        default_grid={"a": (-0.9, -0.5, -0.1)},
    ))

    specs.append(IdentitySpec(
        id="I11",
        description="erf(sqrt(a t)) equals the general-b theta integral of "
                    "gamma(1/2+b, a t sec^2) sin^(2b-1) and the complement "
                    "1 - (2/pi) int e^(-a t sec^2)",
        param_names=("a", "t", "b"),
        constraints=(_pos("a"), _nonneg("t"), _pos("b")),
        routes=(("kernel", _i11_kernel), ("general-b", _i11_general_b),
                ("complement", _i11_complement)),
        tol_rel=1e-8, tol_abs=1e-9,
        default_grid={"a": _SHAPE_GRID, "t": _X_GRID_SMOKE, "b": (0.5, 1.0, 2.0)},
    ))

    specs.append(IdentitySpec(
        id="I12",
        description="e^(a t) erfc(sqrt(a t)) = erfcx(sqrt(a t)) = "
                    "(2/pi) int_0^(pi/2) e^(-a t tan^2)",
        param_names=("a", "t"),
        constraints=(_pos("a"), _nonneg("t")),
        routes=(("kernel", _i12_lhs), ("theta-quadrature", _i12_rhs)),
        tol_rel=1e-8, tol_abs=1e-12,
        default_grid={"a": _SHAPE_GRID, "t": _X_GRID_SMOKE},
    ))

    specs.append(IdentitySpec(
        id="I13",
        description="Laplace reduction of f(t) erfc(a sqrt(t)): theta-form, "
                    "s-form and time-domain routes agree",
        param_names=("pair", "a"),
        constraints=(Constraint(_PAIR_INDEX_DESC, _pair_index_ok), _pos("a"),
                     Constraint("pair requires sigma0 < a^2",
                                lambda p: _registry_pair(p).sigma0
                                < p["a"] * p["a"])),
        routes=(("theta-form", _i13_route(ReductionForm.THETA)),
                ("s-form", _i13_route(ReductionForm.S)),
                ("time-domain", _i13_route(ReductionForm.TIME))),
        tol_rel=1e-7, tol_abs=1e-30,
        default_grid={"pair": tuple(float(i) for i in range(len(_REGISTRY))),
                      "a": _A_SMALL},
    ))

    specs.append(IdentitySpec(
        id="I14",
        description="closed moment formulas: int t^r erfc(a sqrt(t)) = "
                    "Gamma(r+3/2)/(a^(2r+2) sqrt(pi) (1+r)) (kind=0) and "
                    "int t^mu erfc(a t) = Gamma(1+mu/2)/(sqrt(pi) a^(mu+1) "
                    "(1+mu)) (kind=1, with r playing mu)",
        param_names=("kind", "r", "a"),
        constraints=(Constraint("kind must be 0 (erfc(a sqrt(t))) or 1 (erfc(a t))",
                                lambda p: p["kind"] in (0.0, 1.0)),
                     Constraint("r must be > -1",
                                lambda p: math.isfinite(p["r"]) and p["r"] > -1.0),
                     _pos("a")),
        routes=(("closed", _i14_closed), ("time-quadrature", _i14_quad)),
        tol_rel=1e-8, tol_abs=1e-30,
        default_grid={"kind": (0.0, 1.0), "r": _R_MOMENT, "a": _A_MOMENT},
    ))

    specs.append(IdentitySpec(
        id="I15",
        description="exponentially weighted Laplace reduction of "
                    "e^(a^2 t) f(t) erfc(a sqrt(t)): admissible routes agree",
        param_names=("pair", "a"),
        constraints=(Constraint(_PAIR_INDEX_DESC, _pair_index_ok), _pos("a"),
                     Constraint(
                         "theta-form under exp weighting needs sigma0 < 0 or a "
                         "Dirac pair (t^r pairs have sigma0 = 0: F(a^2 tan^2) "
                         "is undefined at theta = 0)",
                         lambda p: _registry_pair(p).time_kind == "dirac"
                         or _registry_pair(p).sigma0 < 0.0)),
        routes=(("theta-form", _i15_route(ReductionForm.THETA)),
                ("s-form", _i15_route(ReductionForm.S)),
                ("time-domain", _i15_route(ReductionForm.TIME))),
        tol_rel=1e-7, tol_abs=1e-30,
        default_grid={"pair": tuple(float(i) for i in range(len(_REGISTRY))),
                      "a": _A_SMALL},
        notes="Power pairs are skipped: their sigma0 = 0 leaves the theta-form "
              "undefined at theta = 0 even where the s-form converges.",
    ))

    specs.append(IdentitySpec(
        id="I16",
        description="int t^r e^(a^2 t) erfc(a sqrt(t)) dt equals "
                    "(2 a Gamma(r+1)/pi) int 1/(s^(2r+2)(s^2+a^2)) ds, "
                    "compared on the absolutely convergent window "
                    "-1 < r < -1/2",
        param_names=("r", "a"),
        constraints=(Constraint("r must be > -1 (time-domain integrand must "
                                "be integrable at 0)",
                                lambda p: math.isfinite(p["r"]) and p["r"] > -1.0),
                     Constraint("r must be < -1/2: for r >= -1/2 the weighted "
                                "integrand behaves like t^(r-1/2) at infinity "
                                "and the time-domain integral diverges",
                                lambda p: p["r"] < -0.5),
                     _pos("a")),
        routes=(("time-domain", _i16_lhs), ("s-domain", _i16_rhs)),
        tol_rel=1e-6, tol_abs=1e-30,
        default_grid={"r": _I16_R, "a": _A_SMALL},
        notes=_I16_WINDOW_NOTE,
    ))

    specs.append(IdentitySpec(
        id="I17",
        description="int_a^inf e^(-b^2 t^2) / (t sqrt(t^2 - a^2)) dt = "
                    "(pi / 2a) erfc(a b)",
        param_names=("a", "b"),
        constraints=(_pos("a"), _pos("b")),
        routes=(("quadrature", _i17_lhs), ("closed", _i17_rhs)),
        tol_rel=1e-9, tol_abs=1e-30,
        default_grid={"a": _GAUSS_AB, "b": _GAUSS_AB},
    ))

    specs.append(IdentitySpec(
        id="I18",
        description="int_0^inf e^(-b^2 t^2) / (t^2 + a^2) dt = "
                    "(pi / 2a) e^(a^2 b^2) erfc(a b), right side via erfcx",
        param_names=("a", "b"),
        constraints=(_pos("a"), _pos("b")),
        routes=(("quadrature", _i18_lhs), ("closed", _i18_rhs)),
        tol_rel=1e-9, tol_abs=1e-30,
        default_grid={"a": _GAUSS_AB, "b": _GAUSS_AB},
    ))

    specs.append(IdentitySpec(
        id="I19",
        description="Gamma(a) Gamma(1-a) = pi / sin(pi a) on 0 < a < 1",
        param_names=("a",),
        constraints=(_open_interval("a", 0.0, 1.0),),
        routes=(("kernel", _i19_lhs), ("closed", _i19_rhs)),
        tol_rel=1e-12, tol_abs=1e-30,
        default_grid={"a": _UNIT_OPEN_GRID},
    ))

    return tuple(specs)


_CATALOG: Optional[tuple] = None
_CATALOG_MAP: Optional[dict] = None


def catalog() -> tuple:
    """All identity specs, in id order I1..I19."""
    global _CATALOG, _CATALOG_MAP
    if _CATALOG is None:
        _CATALOG = _build_catalog()
        _CATALOG_MAP = {s.id: s for s in _CATALOG}
    return _CATALOG


def get_identity(identity_id: str) -> IdentitySpec:
    catalog()
    try:
        return _CATALOG_MAP[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity id {identity_id!r}; "
                       f"known ids are I1..I{len(_CATALOG)}") from None


_ROUTE_ERRORS = (DomainError, ConvergenceError, IntegrandError, OverflowError,
                 ZeroDivisionError)


def run_identity(identity, params: Mapping[str, float],
                 tol_rel: Optional[float] = None,
                 tol_abs: Optional[float] = None) -> CheckRecord:
    """Evaluate every route of one identity at one admissible point.

    Out-of-domain parameters raise ``DomainError`` naming the violated
    constraint.  Evaluation failures inside a route are embedded in the
    record as a failed check with a reason, not raised.
    """
    spec = identity if isinstance(identity, IdentitySpec) else get_identity(identity)
    missing = [n for n in spec.param_names if n not in params]
    if missing:
        raise ValueError(f"{spec.id}: missing parameters {missing}")
    point = {n: float(params[n]) for n in spec.param_names}
    reason = spec.violated_constraint(point)
    if reason is not None:
        raise DomainError(f"{spec.id}: {reason}")
    rel = spec.tol_rel if tol_rel is None else tol_rel
    abs_ = spec.tol_abs if tol_abs is None else tol_abs

    start = time.perf_counter()
    values = []
    errs = []
    for label, evaluator in spec.routes:
        try:
            r = evaluator(point)
        except _ROUTE_ERRORS as exc:
            return failed_record(spec.id, point,
                                 f"route {label!r} failed: {exc}",
                                 time.perf_counter() - start)
        values.append(r.value)
        errs.append(r.abs_err)
    return compare_values(spec.id, point, values, errs, rel, abs_,
                          time.perf_counter() - start)


def run_grid(identity, grid="default",
             tol_rel: Optional[float] = None,
             tol_abs: Optional[float] = None) -> GridResult:
    """Run one identity over a parameter grid.

    ``grid`` is "default" or a mapping param name -> list of values;
    unspecified parameters take the identity's default grid.  Out-of-domain
    points are skipped with a notation, never errored, and failures never
    abort the run.
    """
    spec = identity if isinstance(identity, IdentitySpec) else get_identity(identity)
    axes = dict(spec.default_grid)
    if grid != "default":
        for name, values in grid.items():
            if name in axes:
                axes[name] = tuple(float(v) for v in values)
    records = []
    skipped = []
    for combo in itertools.product(*(axes[n] for n in spec.param_names)):
        point = dict(zip(spec.param_names, combo))
        reason = spec.violated_constraint(point)
        if reason is not None:
            skipped.append(SkippedPoint(spec.id, point, reason))
            continue
        records.append(run_identity(spec, point, tol_rel, tol_abs))
    return GridResult(spec.id, records, skipped)
