"""Verification reports: one pass/fail record per checked index."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .numerics import format_rational

__all__ = ["Check", "VerificationReport"]


@dataclass(frozen=True)
class Check:
    label: str
    index: tuple[int, ...]
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        out = {"label": self.label, "index": list(self.index), "pass": self.passed}
        if not self.passed:
            out["expected"] = format_rational(self.expected)
            out["actual"] = format_rational(self.actual)
        return out


@dataclass
class VerificationReport:
    kind: str
    n_max: int
    labels: tuple[str, ...] = ()
    checks: list[Check] = field(default_factory=list)

    def add(self, label: str, index: tuple[int, ...], expected, actual) -> Check:
        check = Check(label, tuple(index), expected, actual)
        self.checks.append(check)
        return check

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __len__(self) -> int:
        return len(self.checks)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "n_max": self.n_max,
            "labels": list(self.labels),
            "passed": sum(c.passed for c in self.checks),
            "failed": len(self.failures),
            "all_passed": self.all_passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    def to_table(self, verbose: bool = False) -> str:
        """Human-readable summary; lists every check only when ``verbose``."""
        lines = [f"{self.kind}: n_max={self.n_max}, {len(self.checks)} checks"]
        shown = self.checks if verbose else self.failures
        for c in shown:
            idx = ",".join(str(i) for i in c.index)
            status = "ok" if c.passed else "MISMATCH"
            line = f"  {c.label:<24} ({idx}) {status}"
            if not c.passed:
                line += f" expected={format_rational(c.expected)} actual={format_rational(c.actual)}"
            lines.append(line)
        n_fail = len(self.failures)
        lines.append("  all checks passed" if n_fail == 0 else f"  {n_fail} check(s) FAILED")
        return "\n".join(lines)
