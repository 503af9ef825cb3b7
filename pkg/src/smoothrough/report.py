"""Pass/fail records produced by the checking routines."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .linalg import Matrix


def matrix_json(m: Matrix) -> list[list[str]]:
    return [[str(x) for x in r] for r in m.tolist()]


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "detail": self.detail}


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)
    info: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, **detail) -> bool:
        self.checks.append(Check(name, bool(passed), detail))
        return bool(passed)

    def equal(self, name: str, lhs, rhs, **detail) -> bool:
        """Record an exact equality of morphisms (matrices shown on failure)."""
        ok = lhs == rhs
        if not ok:
            detail["lhs"] = matrix_json(lhs.mat)
            detail["rhs"] = matrix_json(rhs.mat)
        return self.add(name, ok, **detail)

    def extend(self, other: "Report", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.detail))

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "info": self.info,
            "checks": [c.to_dict() for c in self.checks],
        }

    def __str__(self) -> str:
        lines = [f"{self.title}: {'PASS' if self.passed else 'FAIL'}"]
        for k, v in self.info.items():
            lines.append(f"  {k} = {v}")
        for c in self.checks:
            lines.append(f"  [{'ok' if c.passed else 'FAIL'}] {c.name}")
        return "\n".join(lines)
