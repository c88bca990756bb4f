"""A registry of named Laplace-transform pairs f(t) <-> F(s).

Each pair records its abscissa of convergence sigma0; evaluating F at or
below it is a reported domain error, never a silent value.  Dirac pairs
carry no time-domain function, only the impulse location; operators that
need a time-domain value special-case them.  Ordinary pairs also expose
``log_f`` (the log of f) so integrands can be composed in log space without
spurious overflow.
"""

import math
import re
import time
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import DomainError, UnsupportedPairKindError
from .kernel import gamma_fn, ln_gamma
from .quadrature import QuadConfig, half_line, integrate
from .records import CheckRecord, compare_values

_EXP_OVERFLOW = 709.0


@dataclass(frozen=True)
class TransformPair:
    """A named Laplace pair: time-domain description plus s-domain evaluator."""

    name: str
    params: dict
    time_kind: str  # "ordinary" or "dirac"
    sigma0: float   # -inf for pairs valid on the whole axis
    F: Callable[[float], float] = field(compare=False)
    f: Optional[Callable[[float], float]] = field(default=None, compare=False)
    log_f: Optional[Callable[[float], float]] = field(default=None, compare=False)
    impulse_location: Optional[float] = None
    singular_at_zero: bool = False  # f(t) unbounded as t -> 0+

    def label(self) -> str:
        inner = ",".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"{self.name}({inner})"


def _guard_sigma0(raw: Callable[[float], float], sigma0: float,
                  label: str) -> Callable[[float], float]:
    def F(s: float) -> float:
        if not s > sigma0:
            raise DomainError(
                f"{label}: F(s) is only defined for s > sigma0 = {sigma0:g}, "
                f"got s = {s!r}")
        return raw(s)
    return F


def _f_from_log(log_f: Callable[[float], float]) -> Callable[[float], float]:
    def f(t: float) -> float:
        e = log_f(t)
        if e == -math.inf:
            return 0.0
        return math.exp(e) if e < _EXP_OVERFLOW else math.inf
    return f


def make_power(r: float) -> TransformPair:
    """The pair t^r <-> Gamma(r+1)/s^(r+1), valid for r > -1, sigma0 = 0."""
    if not (math.isfinite(r) and r > -1.0):
        raise DomainError(f"power pair requires r > -1, got r = {r!r}")
    lg = ln_gamma(r + 1.0)
    label = f"power(r={r:g})"

    def raw_F(s: float) -> float:
        e = lg - (r + 1.0) * math.log(s)
        return math.exp(e) if e < _EXP_OVERFLOW else math.inf

    def log_f(t: float) -> float:
        return r * math.log(t)

    return TransformPair(
        name="power", params={"r": r}, time_kind="ordinary", sigma0=0.0,
        F=_guard_sigma0(raw_F, 0.0, label),
        f=_f_from_log(log_f), log_f=log_f,
        singular_at_zero=r < 0.0)


def make_dirac(b: float) -> TransformPair:
    """The impulse at t = b > 0, with F(s) = e^(-b s) valid for every s."""
    if not (math.isfinite(b) and b > 0.0):
        raise DomainError(f"dirac pair requires b > 0, got b = {b!r}")

    def raw_F(s: float) -> float:
        z = -b * s
        return math.exp(z) if z < _EXP_OVERFLOW else math.inf

    return TransformPair(
        name="dirac", params={"b": b}, time_kind="dirac", sigma0=-math.inf,
        F=_guard_sigma0(raw_F, -math.inf, f"dirac(b={b:g})"),
        impulse_location=b)


def make_exponential(c: float) -> TransformPair:
    """The pair e^(c t) <-> 1/(s - c), sigma0 = c."""
    if not math.isfinite(c):
        raise DomainError(f"exponential pair requires finite c, got c = {c!r}")

    def raw_F(s: float) -> float:
        return 1.0 / (s - c)

    def log_f(t: float) -> float:
        return c * t

    return TransformPair(
        name="exp", params={"c": c}, time_kind="ordinary", sigma0=c,
        F=_guard_sigma0(raw_F, c, f"exp(c={c:g})"),
        f=_f_from_log(log_f), log_f=log_f)


_VERIFY_TOL_REL = 1e-8
_VERIFY_CFG = QuadConfig(rel_tol=1e-12, abs_tol=1e-300, max_level=12,
                         max_evals=200_000)


def verify_pair(pair: TransformPair,
                cfg: QuadConfig = _VERIFY_CFG) -> list[CheckRecord]:
    """Check F against quadrature of the defining integral on a 5-point s-grid.

    The grid is geometric on [max(sigma0,0)+1, max(sigma0,0)+100].  Dirac
    pairs have no time-domain function to integrate and are rejected.
    """
    if pair.time_kind != "ordinary":
        raise UnsupportedPairKindError(
            f"verify_pair supports ordinary pairs only, got {pair.label()} "
            f"of kind {pair.time_kind!r}")
    base = max(pair.sigma0, 0.0)
    lo = base + 1.0
    hi = base + 100.0
    ratio = hi / lo
    records = []
    for i in range(5):
        s = lo * ratio ** (i / 4.0)
        start = time.perf_counter()

        def integrand(t: float, s: float = s) -> float:
            e = pair.log_f(t) - s * t
            return math.exp(e) if e < _EXP_OVERFLOW else math.inf

        quad = integrate(integrand,
                         half_line(0.0, singular_lower=pair.singular_at_zero),
                         cfg)
        expected = pair.F(s)
        records.append(compare_values(
            identity=f"pair:{pair.label()}",
            params={"s": s},
            values=(expected, quad.value),
            errs=(abs(expected) * 2.0 ** -50, quad.abs_err),
            tol_rel=_VERIFY_TOL_REL,
            tol_abs=1e-30,
            wall_time=time.perf_counter() - start,
        ))
    return records


_REGISTRY: Optional[tuple] = None


def default_registry() -> tuple:
    """The immutable tuple of pairs exercised by the identity suite."""
    global _REGISTRY
    if _REGISTRY is None:
        _REGISTRY = (
            make_power(0.0),
            make_power(1.0),
            make_power(-0.5),
            make_exponential(-1.0),
            make_dirac(1.0),
            make_dirac(0.25),
        )
    return _REGISTRY


_PAIR_MAKERS = {
    "power": ("r", make_power),
    "dirac": ("b", make_dirac),
    "exp": ("c", make_exponential),
}

_PAIR_RE = re.compile(r"^\s*([A-Za-z_]\w*)\s*\((.*)\)\s*$")


def parse_pair(text: str) -> TransformPair:
    """Build a pair from CLI syntax like ``power(r=-0.5)`` or ``dirac(b=1)``."""
    m = _PAIR_RE.match(text)
    if not m:
        raise ValueError(f"cannot parse pair spec {text!r}; "
                         f"expected name(param=value)")
    name, argtext = m.group(1), m.group(2)
    if name not in _PAIR_MAKERS:
        raise ValueError(f"unknown pair name {name!r}; "
                         f"expected one of {sorted(_PAIR_MAKERS)}")
    expected_param, maker = _PAIR_MAKERS[name]
    kwargs = {}
    for chunk in argtext.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise ValueError(f"malformed pair argument {chunk!r} in {text!r}")
        k, _, v = chunk.partition("=")
        try:
            kwargs[k.strip()] = float(v)
        except ValueError:
            raise ValueError(f"non-numeric value {v!r} for parameter "
                             f"{k.strip()!r} in {text!r}") from None
    if set(kwargs) != {expected_param}:
        raise ValueError(f"pair {name!r} takes exactly one parameter "
                         f"{expected_param!r}, got {sorted(kwargs) or 'none'}")
    return maker(kwargs[expected_param])
