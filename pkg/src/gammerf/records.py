"""Check-record types shared by the pair verifier and the identity suite."""

import math
from dataclasses import dataclass, field
from typing import Optional

#: Floor used in relative-difference denominators.
TINY = 1e-300


@dataclass(frozen=True)
class CheckRecord:
    """Outcome of verifying one identity (or transform pair) at one point.

    ``passed`` is true iff ``abs_diff <= tol_abs`` or ``rel_diff <= tol_rel``
    at the tolerances the check ran with.  When an evaluation route failed
    outright the numeric fields are ``None`` and ``reason`` explains why.
    For identities with more than two routes, ``abs_diff`` is the spread
    (max minus min) across all routes and ``rhs_value`` is the route value
    farthest from ``lhs_value``.
    """

    identity: str
    params: dict
    lhs_value: Optional[float]
    rhs_value: Optional[float]
    abs_diff: Optional[float]
    rel_diff: Optional[float]
    passed: bool
    lhs_err: Optional[float]
    rhs_err: Optional[float]
    wall_time: float
    reason: str = ""

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": dict(self.params),
            "lhs_value": self.lhs_value,
            "rhs_value": self.rhs_value,
            "abs_diff": self.abs_diff,
            "rel_diff": self.rel_diff,
            "pass": self.passed,
            "lhs_err": self.lhs_err,
            "rhs_err": self.rhs_err,
            "wall_time": self.wall_time,
            "reason": self.reason,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "CheckRecord":
        return cls(
            identity=d["identity"],
            params=dict(d["params"]),
            lhs_value=d["lhs_value"],
            rhs_value=d["rhs_value"],
            abs_diff=d["abs_diff"],
            rel_diff=d["rel_diff"],
            passed=d["pass"],
            lhs_err=d["lhs_err"],
            rhs_err=d["rhs_err"],
            wall_time=d["wall_time"],
            reason=d.get("reason", ""),
        )


@dataclass(frozen=True)
class SkippedPoint:
    """A grid point outside an identity's domain, with the violated constraint."""

    identity: str
    params: dict
    reason: str

    def to_dict(self) -> dict:
        return {"identity": self.identity, "params": dict(self.params),
                "reason": self.reason}

    @classmethod
    def from_dict(cls, d: dict) -> "SkippedPoint":
        return cls(d["identity"], dict(d["params"]), d["reason"])


def compare_values(identity: str, params: dict, values, errs,
                   tol_rel: float, tol_abs: float, wall_time: float) -> CheckRecord:
    """Build a CheckRecord from two or more route values at one point."""
    vmin = min(values)
    vmax = max(values)
    abs_diff = vmax - vmin
    lhs = values[0]
    rest = list(values[1:])
    j = max(range(len(rest)), key=lambda i: abs(rest[i] - lhs))
    rel_diff = abs_diff / max(max(abs(v) for v in values), TINY)
    passed = (abs_diff <= tol_abs) or (rel_diff <= tol_rel)
    return CheckRecord(
        identity=identity,
        params=dict(params),
        lhs_value=lhs,
        rhs_value=rest[j],
        abs_diff=abs_diff,
        rel_diff=rel_diff,
        passed=passed,
        lhs_err=errs[0],
        rhs_err=max(errs[1:]),
        wall_time=wall_time,
    )


def failed_record(identity: str, params: dict, reason: str,
                  wall_time: float) -> CheckRecord:
    """Record for a point whose evaluation raised instead of producing values."""
    return CheckRecord(
        identity=identity,
        params=dict(params),
        lhs_value=None,
        rhs_value=None,
        abs_diff=None,
        rel_diff=None,
        passed=False,
        lhs_err=None,
        rhs_err=None,
        wall_time=wall_time,
        reason=reason,
    )
