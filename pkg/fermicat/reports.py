"""
reports.py
----------
Verification reports shared by every check suite.

A Report is an ordered list of named pass/fail checks. Its dict form is the
stable JSON surface:

    {"suite": ..., "n": n, "seed": seed, "passed": k, "failed": m,
     "checks": [{"name": ..., "pass": bool, "detail": ...}, ...]}
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""

    def to_dict(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


@dataclass
class Report:
    suite: str
    n: int | None = None
    seed: int | None = None
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> Check:
        check = Check(name, bool(passed), detail)
        self.checks.append(check)
        if not check.passed:
            logger.warning("[%s] check failed: %s  %s", self.suite, name, detail)
        return check

    def extend(self, other: "Report") -> None:
        """Append another suite's checks, prefixed with its suite name."""
        for check in other.checks:
            self.checks.append(Check(f"{other.suite}: {check.name}", check.passed, check.detail))

    @property
    def passed_count(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def failed_count(self) -> int:
        return len(self.checks) - self.passed_count

    @property
    def ok(self) -> bool:
        return self.failed_count == 0

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "n": self.n,
            "seed": self.seed,
            "passed": self.passed_count,
            "failed": self.failed_count,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_text(self) -> str:
        lines = [f"{self.suite}: {self.passed_count}/{len(self.checks)} passed"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.name}" + (f"  ({c.detail})" if c.detail else ""))
        return "\n".join(lines)
