"""Verification reports: the common result type of every exhaustive check."""

from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Any


def _plain(value: Any) -> Any:
    """Convert tuples/sets/etc. to JSON-friendly values with a stable order."""
    if isinstance(value, dict):
        return {str(k): _plain(v) for k, v in sorted(value.items(), key=lambda kv: str(kv[0]))}
    if isinstance(value, (set, frozenset)):
        return [_plain(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    if isinstance(value, float):
        return float(f"{value:.6g}")
    return value


@dataclass
class VerificationReport:
    """Outcome of one named check.

    A report either stands alone (``passed`` set directly) or aggregates
    sub-checks, in which case it passes iff every sub-check passes.
    Failures are data: ``witness`` carries the offending tuple.
    """

    name: str
    passed: bool = True
    witness: Any = None
    counts: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)
    note: str | None = None
    elapsed: float | None = None

    def add(self, name: str, passed: bool, witness: Any = None, **counts) -> VerificationReport:
        sub = VerificationReport(name, bool(passed), witness if not passed else None, counts)
        self.checks.append(sub)
        if not passed:
            self.passed = False
        return sub

    def extend(self, report: VerificationReport) -> VerificationReport:
        self.checks.append(report)
        if not report.passed:
            self.passed = False
        return report

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[VerificationReport]:
        out = [] if self.passed or self.checks else [self]
        for c in self.checks:
            out.extend(c.failures())
        return out

    def find(self, name: str) -> VerificationReport | None:
        if self.name == name:
            return self
        for c in self.checks:
            hit = c.find(name)
            if hit is not None:
                return hit
        return None

    def to_dict(self, timestamps: bool = True) -> dict:
        d: dict[str, Any] = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            d["witness"] = _plain(self.witness)
        if self.counts:
            d["counts"] = _plain(self.counts)
        if self.note:
            d["note"] = self.note
        if self.checks:
            d["checks"] = [c.to_dict(timestamps) for c in self.checks]
        if timestamps and self.elapsed is not None:
            d["elapsed"] = round(self.elapsed, 4)
        return dict(sorted(d.items()))

    def to_json(self, timestamps: bool = True) -> str:
        return json.dumps(self.to_dict(timestamps), sort_keys=True)

    def lines(self, indent: int = 0, timestamps: bool = True) -> list[str]:
        tag = "PASS" if self.passed else "FAIL"
        parts = [f"{'  ' * indent}[{tag}] {self.name}"]
        for k in sorted(self.counts, key=str):
            parts.append(f"{k}={_plain(self.counts[k])}")
        if self.witness is not None:
            parts.append(f"witness={_plain(self.witness)}")
        if self.note:
            parts.append(f"({self.note})")
        if timestamps and self.elapsed is not None:
            parts.append(f"elapsed={self.elapsed:.3f}s")
        out = [" ".join(str(p) for p in parts)]
        for c in self.checks:
            out.extend(c.lines(indent + 1, timestamps))
        return out

    def text(self, timestamps: bool = True) -> str:
        return "\n".join(self.lines(0, timestamps))


@contextmanager
def timed(report: VerificationReport):
    start = time.perf_counter()
    try:
        yield report
    finally:
        report.elapsed = time.perf_counter() - start
