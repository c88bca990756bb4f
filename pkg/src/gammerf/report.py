"""Machine-readable verification reports: JSON (round-trippable) and CSV."""

import csv
import json
from dataclasses import dataclass, field

from .records import CheckRecord, SkippedPoint


@dataclass
class Report:
    """A verification run: records, skip notations, per-identity notes."""

    tool_version: str
    timestamp: str
    records: list
    skipped: list = field(default_factory=list)
    notes: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        return {
            "total": len(self.records),
            "pass": sum(1 for r in self.records if r.passed),
            "fail": sum(1 for r in self.records if not r.passed),
            "skipped_out_of_domain": len(self.skipped),
        }

    def to_dict(self) -> dict:
        return {
            "tool_version": self.tool_version,
            "timestamp": self.timestamp,
            "records": [r.to_dict() for r in self.records],
            "skipped": [s.to_dict() for s in self.skipped],
            "notes": dict(self.notes),
            "summary": self.summary,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        report = cls(
            tool_version=d["tool_version"],
            timestamp=d["timestamp"],
            records=[CheckRecord.from_dict(r) for r in d["records"]],
            skipped=[SkippedPoint.from_dict(s) for s in d.get("skipped", [])],
            notes=dict(d.get("notes", {})),
        )
        stored = d.get("summary")
        if stored is not None and stored != report.summary:
            raise ValueError("report summary does not match its record tallies")
        return report

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))


#: Fixed leading/trailing CSV columns; param_1..param_k sit between them.
_CSV_PREFIX = ["identity"]
_CSV_SUFFIX = ["lhs", "rhs", "abs_diff", "rel_diff", "pass"]


def _fmt(x) -> str:
    return "" if x is None else repr(x)


def write_csv(report: Report, fh) -> None:
    """Write records as CSV: identity,param_1..param_k,lhs,rhs,abs_diff,rel_diff,pass."""
    k = max((len(r.params) for r in report.records), default=0)
    writer = csv.writer(fh)
    writer.writerow(_CSV_PREFIX + [f"param_{i + 1}" for i in range(k)] + _CSV_SUFFIX)
    for r in report.records:
        cells = [f"{name}={value!r}" for name, value in r.params.items()]
        cells += [""] * (k - len(cells))
        writer.writerow([r.identity] + cells + [
            _fmt(r.lhs_value), _fmt(r.rhs_value), _fmt(r.abs_diff),
            _fmt(r.rel_diff), str(r.passed).lower(),
        ])
