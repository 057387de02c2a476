"""Pass/fail reports produced by the verification routines."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    label: str
    passed: bool
    detail: str = ""


@dataclass
class Report:
    """Ordered list of named checks; a report passes when every check does."""

    name: str
    checks: list[Check] = field(default_factory=list)

    def add(self, label: str, passed: bool, detail: str = "") -> bool:
        self.checks.append(Check(label, bool(passed), detail))
        return bool(passed)

    def extend(self, other: "Report", prefix: str | None = None) -> None:
        for c in other.checks:
            label = f"{prefix}: {c.label}" if prefix else c.label
            self.checks.append(Check(label, c.passed, c.detail))

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.passed

    @property
    def first_failure(self) -> Check | None:
        return next((c for c in self.checks if not c.passed), None)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def lines(self, verbose: bool = False) -> list[str]:
        out = []
        for c in self.checks:
            if verbose or not c.passed:
                tag = "ok  " if c.passed else "FAIL"
                out.append(f"  [{tag}] {c.label}" + (f"  ({c.detail})" if c.detail else ""))
        status = "PASS" if self.passed else "FAIL"
        out.append(f"{self.name}: {status} ({len(self.checks) - len(self.failures)}/{len(self.checks)} checks)")
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [{"label": c.label, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }
