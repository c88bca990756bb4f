"""Deterministic double-exponential quadrature on finite and half-infinite intervals.

Finite intervals use the tanh-sinh rule, half-infinite ones exp-sinh.  Both
tolerate integrable endpoint singularities without a user-supplied change of
variables, which is what the theta- and s-domain integrands here require.
The error estimate is the difference of the last two refinement levels, with
one extra safeguard level run after the tolerance is first met.
"""

import math
from dataclasses import dataclass
from typing import Callable

from .errors import ConvergenceError, DomainError, IntegrandError
from .result import EvalResult

_HALF_PI = math.pi / 2.0
_EPS = 2.0 ** -52

# Truncation points of the trapezoid sums in the transformed variable.  Past
# these the node offsets underflow (tanh-sinh) or exp() would overflow
# (exp-sinh); contributions there are far below double precision.
_T_MAX_TS = 6.5
_T_MAX_ES = 6.78

# Offsets below this are indistinguishable from the endpoint at double
# precision; a non-finite integrand value there is clamped to zero when the
# endpoint is flagged singular (the DE weight has already vanished).
_CLAMP_OFFSET = 1e-300

# Per-term early-exit: stop walking outward once terms fall this far below
# the largest term seen, but never before |t| reaches _BREAK_T_MIN.
_BREAK_REL = 1e-17
_BREAK_T_MIN = 3.0


@dataclass(frozen=True)
class QuadConfig:
    """Tolerances and budget controlling one quadrature run."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-14
    max_level: int = 10
    max_evals: int = 200_000

    def __post_init__(self):
        if not (math.isfinite(self.rel_tol) and self.rel_tol >= 1e-15):
            raise DomainError("QuadConfig.rel_tol must be finite and >= 1e-15")
        if not (math.isfinite(self.abs_tol) and self.abs_tol >= 1e-300):
            raise DomainError("QuadConfig.abs_tol must be finite and >= 1e-300")
        if not 1 <= self.max_level <= 12:
            raise DomainError("QuadConfig.max_level must be in [1, 12]")
        if self.max_evals < 1:
            raise DomainError("QuadConfig.max_evals must be positive")


DEFAULT_CONFIG = QuadConfig()


@dataclass(frozen=True)
class IntervalSpec:
    """An integration domain plus endpoint-singularity hints."""

    kind: str  # "finite" or "half-infinite"
    lower: float
    upper: float = math.inf
    singular_lower: bool = False
    singular_upper: bool = False

    def __post_init__(self):
        if self.kind not in ("finite", "half-infinite"):
            raise DomainError(f"unknown interval kind {self.kind!r}")
        if not math.isfinite(self.lower):
            raise DomainError("interval lower bound must be finite")
        if self.kind == "finite":
            if not math.isfinite(self.upper) or not self.lower < self.upper:
                raise DomainError("finite interval requires lower < upper, both finite")
        elif self.singular_upper:
            raise DomainError("half-infinite interval has no upper endpoint to flag singular")


def finite_interval(lower: float, upper: float, *, singular_lower: bool = False,
                    singular_upper: bool = False) -> IntervalSpec:
    return IntervalSpec("finite", lower, upper, singular_lower, singular_upper)


def half_line(lower: float = 0.0, *, singular_lower: bool = False) -> IntervalSpec:
    return IntervalSpec("half-infinite", lower, math.inf, singular_lower, False)


# Node data caches, keyed by the (exactly dyadic) abscissa t > 0.
_TS_NODES: dict = {}
_ES_NODES: dict = {}


def _ts_node(t: float):
    """tanh-sinh node data: (offset_unit, weight_unit) for abscissa t >= 0.

    offset_unit = 1 - tanh((pi/2) sinh t) is the node's distance from the
    near endpoint on the unit half-width scale, computed without cancellation.
    """
    data = _TS_NODES.get(t)
    if data is None:
        u = _HALF_PI * math.sinh(t)
        em = math.exp(-2.0 * u)  # underflows to 0 harmlessly for large t
        offset_unit = 2.0 * em / (1.0 + em)
        sech = 2.0 * math.exp(-u) / (1.0 + em)
        weight_unit = _HALF_PI * math.cosh(t) * sech * sech
        data = (offset_unit, weight_unit)
        _TS_NODES[t] = data
    return data


def _es_node(t: float):
    """exp-sinh node data: (g_plus, w_plus, g_minus, w_minus) for t >= 0.

    x = lower + g, dx/dt = w; the minus entries are the mirrored node.
    """
    data = _ES_NODES.get(t)
    if data is None:
        u = _HALF_PI * math.sinh(t)
        g_plus = math.exp(u)
        g_minus = math.exp(-u)
        c = _HALF_PI * math.cosh(t)
        data = (g_plus, c * g_plus, g_minus, c * g_minus)
        _ES_NODES[t] = data
    return data


class _Budget:
    __slots__ = ("used", "limit")

    def __init__(self, limit: int):
        self.used = 0
        self.limit = limit

    def spend(self):
        self.used += 1
        if self.used > self.limit:
            raise _BudgetExceeded


class _BudgetExceeded(Exception):
    pass


class _TanhSinhMap:
    """Maps DE abscissae onto a finite interval [a, b]."""

    def __init__(self, domain: IntervalSpec):
        self.a = domain.lower
        self.b = domain.upper
        self.halfw = 0.5 * (domain.upper - domain.lower)
        self.singular_lower = domain.singular_lower
        self.singular_upper = domain.singular_upper
        self.t_max = _T_MAX_TS

    def terms(self, t: float):
        """Yield (x, weight, offset, endpoint_singular) for the ±t nodes."""
        offset_unit, weight_unit = _ts_node(t)
        d = self.halfw * offset_unit
        w = self.halfw * weight_unit
        if t == 0.0:
            yield self.a + d, w, d, False
            return
        yield self.b - d, w, d, self.singular_upper
        yield self.a + d, w, d, self.singular_lower


class _ExpSinhMap:
    """Maps DE abscissae onto a half-infinite interval [a, inf)."""

    def __init__(self, domain: IntervalSpec):
        self.a = domain.lower
        self.singular_lower = domain.singular_lower
        self.t_max = _T_MAX_ES

    def terms(self, t: float):
        g_plus, w_plus, g_minus, w_minus = _es_node(t)
        if t == 0.0:
            yield self.a + g_plus, w_plus, g_plus, False
            return
        # +t walks toward infinity, -t toward the finite endpoint
        yield self.a + g_plus, w_plus, g_plus, False
        yield self.a + g_minus, w_minus, g_minus, self.singular_lower


def _sum_new_nodes(f, mapping, level: int, budget: _Budget) -> float:
    """Trapezoid contributions of the nodes new at this refinement level."""
    h = 2.0 ** -level
    k = 0 if level == 0 else 1
    step = 1 if level == 0 else 2
    total = 0.0
    largest = 0.0
    small_run = 0
    while True:
        t = k * h
        if t > mapping.t_max:
            break
        pair = 0.0
        for x, w, d, endpoint_singular in mapping.terms(t):
            if d == 0.0 or w == 0.0:
                continue  # node indistinguishable from the endpoint
            budget.spend()
            fx = f(x)
            if not math.isfinite(fx):
                if endpoint_singular and d < _CLAMP_OFFSET:
                    continue  # within one spacing of a singular endpoint
                raise IntegrandError(
                    f"integrand returned non-finite value {fx!r} at x={x!r}", x)
            pair += w * fx
        total += pair
        mag = abs(pair)
        if mag > largest:
            largest = mag
        if t >= _BREAK_T_MIN and mag <= _BREAK_REL * largest:
            small_run += 1
            if small_run >= 2:
                break
        else:
            small_run = 0
        k += step
    return total


def integrate(f: Callable[[float], float], domain: IntervalSpec,
              cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Integrate ``f`` over ``domain`` with double-exponential quadrature.

    Returns value and an error estimate taken from the difference of the two
    final refinement levels.  Raises ``ConvergenceError`` (carrying the best
    estimate) if the level cap or evaluation budget is hit first, and
    ``IntegrandError`` if ``f`` goes non-finite away from a flagged endpoint.
    """
    mapping = _TanhSinhMap(domain) if domain.kind == "finite" else _ExpSinhMap(domain)
    budget = _Budget(cfg.max_evals)

    sums = []
    diff = math.inf
    converged_at = None
    try:
        for level in range(cfg.max_level + 1):
            new = _sum_new_nodes(f, mapping, level, budget)
            h = 2.0 ** -level
            s = h * new if level == 0 else 0.5 * sums[-1] + h * new
            sums.append(s)
            if level >= 2:
                diff = abs(sums[-1] - sums[-2])
                if converged_at is not None:
                    break  # safeguard level done
                if diff <= max(cfg.rel_tol * abs(s), cfg.abs_tol):
                    converged_at = level
                    if level == cfg.max_level:
                        break
    except _BudgetExceeded:
        if converged_at is None:
            best = None
            if len(sums) >= 2:
                best = EvalResult(sums[-1], abs(sums[-1] - sums[-2]),
                                  "quadrature", budget.limit)
            raise ConvergenceError(
                f"quadrature budget of {cfg.max_evals} evaluations exhausted "
                f"before reaching tolerance", best=best) from None
        # budget died inside the safeguard level: the converged sum stands

    if converged_at is None:
        best = EvalResult(sums[-1], diff, "quadrature", budget.used)
        raise ConvergenceError(
            f"quadrature did not converge within {cfg.max_level} refinement levels "
            f"(last level difference {diff:.3e})", best=best)

    value = sums[-1]
    err = abs(sums[-1] - sums[-2])
    abs_err = max(err, _EPS * abs(value), 1e-300)
    return EvalResult(value, abs_err, "quadrature", budget.used)


def integrate_theta(f: Callable[[float], float],
                    cfg: QuadConfig = DEFAULT_CONFIG) -> EvalResult:
    """Integrate ``f`` over [0, pi/2] with both endpoints flagged singular.

    Convenience wrapper for the trigonometric integrands, whose cot/sec
    weights may blow up (integrably) at either end.
    """
    domain = IntervalSpec("finite", 0.0, _HALF_PI,
                          singular_lower=True, singular_upper=True)
    return integrate(f, domain, cfg)
